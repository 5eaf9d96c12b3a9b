#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "nnsdist/json_io.hpp"
#include "nnsdist/version.hpp"

using namespace nnsdist;
using json_io::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nnsdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

json load(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

double matrix_diff(const json& a, const json& b) {
  EXPECT_EQ(a["rows"], b["rows"]);
  EXPECT_EQ(a["cols"], b["cols"]);
  double worst = 0.0;
  for (std::size_t i = 0; i < a["data"].size(); ++i) {
    worst = std::max(worst, std::abs(a["data"][i].get<double>() - b["data"][i].get<double>()));
  }
  return worst;
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(NNSDIST_GOLDEN_DIR) / name;
}

}  // namespace

TEST(cli, build_c_matches_golden) {
  const Result r = run_cli({"build", "--n", "2", "--alpha", "2.356194490192345", "--emit", "C"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(matrix_diff(j["matrix"], load(golden("c2_3pi4.json"))["matrix"]), 1e-12);
  EXPECT_EQ(j["version"], std::string(kVersion));
  EXPECT_TRUE(j["tolerances"].contains("margin"));

  const Result r3 = run_cli({"build", "--n", "3", "--pi-frac", "3/4", "--emit", "C-block"});
  ASSERT_EQ(r3.status, 0) << r3.err;
  EXPECT_LT(matrix_diff(json::parse(r3.out)["matrix"], load(golden("c3_3pi4.json"))["matrix"]),
            1e-12);
}

TEST(cli, build_other_emits) {
  for (const char* emit : {"A", "A-kron", "Q", "B", "C", "C-block"}) {
    const Result r = run_cli({"build", "--n", "2", "--alpha", "2", "--emit", emit});
    EXPECT_EQ(r.status, 0) << emit << r.err;
  }
  const Result kron = run_cli({"build", "--n", "2", "--alpha", "2", "--emit", "A-kron", "--form",
                               "original"});
  const json j = json::parse(kron.out);
  EXPECT_EQ(j["matrix"]["rows"], 4);
  EXPECT_EQ(j["matrix"]["cols"], 9);
  EXPECT_EQ(j["form"], "original");
}

TEST(cli, build_c_displayed_value) {
  // At alpha = 3 pi/4, z^2 = -i, so row [00] of C_2 is (1, 2i, -1, 0, 0, 0).
  const Result r = run_cli({"build", "--n", "2", "--pi-frac", "3/4", "--emit", "C"});
  const json d = json::parse(r.out)["matrix"]["data"];
  EXPECT_NEAR(d[0].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(d[3].get<double>(), 2.0, 1e-15);
  EXPECT_NEAR(d[4].get<double>(), -1.0, 1e-15);
}

TEST(cli, verify_catalog) {
  const Result r = run_cli({"verify-catalog", "--n", "9", "--samples", "20"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 20u);
  for (const auto& rep : j) {
    EXPECT_TRUE(rep["passed"].get<bool>());
    EXPECT_EQ(rep["version"], std::string(kVersion));
    EXPECT_TRUE(rep.contains("tolerances"));
  }
  const Result bad = run_cli({"verify-catalog", "--n", "3", "--alpha", "3.0"});
  EXPECT_EQ(bad.status, cli::kExitUsage);
}

TEST(cli, verify_catalog_failure_exit_code) {
  // A residual tolerance below the float noise floor makes verification fail.
  const Result r = run_cli({"verify-catalog", "--n", "10", "--samples", "3", "--tolerance",
                            "catalog_residual=1e-30"});
  EXPECT_EQ(r.status, cli::kExitVerificationFailed);
}

TEST(cli, feasibility_outcomes) {
  const Result w = run_cli({"feasibility", "--n", "2", "--pi-frac", "7/8"});
  ASSERT_EQ(w.status, 0) << w.err;
  EXPECT_EQ(json::parse(w.out)["outcome"], "witness");
  const Result c = run_cli({"feasibility", "--n", "4", "--alpha", "1.7"});
  ASSERT_EQ(c.status, 0) << c.err;
  const json jc = json::parse(c.out);
  EXPECT_EQ(jc["outcome"], "certificate");
  EXPECT_GE(jc["margin"].get<double>(), 1e-8);
}

TEST(cli, feasibility_indeterminate_exit_code) {
  // Demanding a margin no certificate can reach leaves the point undecided.
  const Result r = run_cli({"feasibility", "--n", "4", "--alpha", "1.7", "--tolerance",
                            "margin=10"});
  EXPECT_EQ(r.status, cli::kExitIndeterminate);
  EXPECT_EQ(json::parse(r.out)["outcome"], "indeterminate");
}

TEST(cli, sweep_csv_schema) {
  const Result r = run_cli({"sweep", "--n", "3", "--points", "5", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> data;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (line.starts_with("#")) continue;
    if (!header_seen) {
      EXPECT_EQ(line, "alpha,n,outcome,metric");
      header_seen = true;
      continue;
    }
    data.push_back(line);
  }
  ASSERT_EQ(data.size(), 5u);
  EXPECT_TRUE(data.front().starts_with("1.5707963267948966,3,certificate,"));
  EXPECT_TRUE(data.back().starts_with("3.141592653589793,3,witness,"));
}

TEST(cli, threshold_order_four) {
  const Result r = run_cli({"threshold", "--n", "4", "--tol", "1e-6"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(std::abs(j["alpha_star"].get<double>() - 5 * std::numbers::pi / 8), 1e-6);
  EXPECT_LE(j["bracket_width"].get<double>(), 1e-6);
}

TEST(cli, necessity_json_and_csv) {
  const Result r = run_cli({"necessity", "--n", "3", "--points", "8"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["anomalies"].empty());
  EXPECT_EQ(j["points"].size(), 8u);
  const Result c = run_cli({"necessity", "--n", "3", "--points", "4", "--format", "csv"});
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("alpha,n,outcome,metric\n"), std::string::npos);
}

TEST(cli, realize_from_seed_and_file) {
  const Result r = run_cli({"realize", "--seed", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["verification"]["passed"].get<bool>());
  EXPECT_EQ(j["seed"], 5);

  const auto dir = std::filesystem::temp_directory_path() / "nnsdist_cli_test";
  std::filesystem::create_directories(dir);
  const auto input = dir / "t.json";
  {
    json t;
    t["matrices"] = json::array({json_io::to_json(ComplexMatrix::identity(2)),
                                 json_io::to_json(ComplexMatrix(2, 2, {0, 1, 0, 0}))});
    std::ofstream(input) << t.dump();
  }
  const Result f = run_cli({"realize", "--input", input.string()});
  ASSERT_EQ(f.status, 0) << f.err;
  const json jf = json::parse(f.out);
  EXPECT_EQ(jf["verification"]["span_dimension"], 2);
  EXPECT_EQ(jf["kraus"]["E"].size(), 3u);

  const auto garbage = dir / "bad.json";
  std::ofstream(garbage) << "{not json";
  EXPECT_EQ(run_cli({"realize", "--input", garbage.string()}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"realize", "--input", (dir / "missing.json").string()}).status,
            cli::kExitUsage);
}

TEST(cli, output_is_deterministic) {
  const std::vector<std::string> args = {"sweep", "--n", "4", "--points", "7"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const std::vector<std::string> realize = {"realize", "--seed", "11"};
  EXPECT_EQ(run_cli(realize).out, run_cli(realize).out);
}

TEST(cli, output_file_and_directory_override) {
  const auto dir = std::filesystem::temp_directory_path() / "nnsdist_cli_out";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("NNSDIST_OUTPUT_DIR", dir.c_str(), 1);
  const Result r = run_cli({"threshold", "--n", "2", "--output", "thr.json"});
  ::unsetenv("NNSDIST_OUTPUT_DIR");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const json j = load(dir / "thr.json");
  EXPECT_EQ(j["order"], 2);
}

TEST(cli, usage_errors) {
  EXPECT_EQ(run_cli({}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold", "--n", "0"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"feasibility", "--n", "3"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"feasibility", "--n", "3", "--alpha", "2", "--pi-frac", "2/3"}).status,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"feasibility", "--n", "3", "--pi-frac", "2/0"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"feasibility", "--n", "3", "--alpha", "0.5"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n", "3", "--format", "xml"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold", "--n", "3", "--format", "csv"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold", "--n", "3", "--tolerance", "margin=-1"}).status,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold", "--n", "3", "--tolerance", "nosuch=1"}).status,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"threshold", "--n", "3", "--tolerance", "margin"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"build", "--n", "2", "--alpha", "2", "--emit", "Z"}).status,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"realize"}).status, cli::kExitUsage);
  const Result r = run_cli({"threshold", "--n", "0"});
  EXPECT_FALSE(r.err.empty());
}

TEST(cli, help_and_version) {
  EXPECT_EQ(run_cli({"--help"}).status, 0);
  const Result v = run_cli({"--version"});
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find(std::string(kVersion)), std::string::npos);
}
