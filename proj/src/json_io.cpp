#include "nnsdist/json_io.hpp"

#include <charconv>
#include <cmath>

namespace nnsdist::json_io {

namespace {

json vector_json(std::span<const double> v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

json probe_fields(const Probe& p) {
  json j;
  j["alpha"] = p.alpha;
  j["outcome"] = std::string(outcome_name(p.kind));
  j["feasible"] = p.feasible;
  j["metric"] = p.metric;
  return j;
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const auto& v : m.data()) {
    data.push_back(v.real());
    data.push_back(v.imag());
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw InvalidArgument("matrix JSON needs rows, cols and data");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() ||
      !j["data"].is_array()) {
    throw InvalidArgument("matrix JSON: rows/cols must be non-negative integers, data an array");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const json& data = j["data"];
  if (data.size() != 2 * rows * cols) {
    throw ShapeMismatch("matrix JSON: data must hold 2*rows*cols numbers");
  }
  std::vector<complex> entries(rows * cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!data[2 * i].is_number() || !data[2 * i + 1].is_number()) {
      throw InvalidArgument("matrix JSON: data entries must be numbers");
    }
    entries[i] = complex(data[2 * i].get<double>(), data[2 * i + 1].get<double>());
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const ReducedVector& y) {
  json labels = json::array();
  for (const auto& l : column_order(y.order())) labels.push_back(l.to_string());
  json j;
  j["order"] = y.order();
  j["labels"] = std::move(labels);
  j["entries"] = vector_json(y.entries());
  return j;
}

json to_json(const VerificationReport& r) {
  json j;
  j["order"] = r.order;
  j["alpha"] = r.alpha;
  j["residual_inf"] = r.residual_inf;
  j["min_entry"] = r.min_entry;
  j["nonneg"] = r.nonneg;
  j["nonzero"] = r.nonzero;
  j["palindromic"] = r.palindromic;
  j["passed"] = r.passed;
  return j;
}

json to_json(const FeasibilityOutcome& outcome, const PhaseAngle& alpha, int order) {
  json j;
  j["order"] = order;
  j["alpha"] = alpha.radians();
  if (const auto* w = std::get_if<Witness>(&outcome)) {
    j["outcome"] = "witness";
    j["residual"] = w->residual;
    j["y"] = to_json(w->y);
  } else {
    const auto& c = std::get<Certificate>(outcome);
    j["outcome"] = "certificate";
    j["margin"] = c.margin;
    j["h"] = vector_json(c.h);
  }
  return j;
}

json to_json(const Probe& p) { return probe_fields(p); }

json to_json(const ThresholdEstimate& t) {
  json j;
  j["order"] = t.order;
  j["alpha_star"] = t.alpha_star;
  j["bracket_lo"] = t.bracket_lo;
  j["bracket_hi"] = t.bracket_hi;
  j["bracket_width"] = t.bracket_width;
  j["conjectured"] = t.conjectured;
  j["deviation"] = std::abs(t.alpha_star - t.conjectured);
  j["probes"] = t.probes;
  j["indeterminate_probes"] = t.indeterminate_probes;
  return j;
}

json to_json(const NecessityReport& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(probe_fields(p));
  json j;
  j["order"] = r.order;
  j["min_margin"] = r.min_margin;
  j["anomalies"] = r.anomalies;
  j["points"] = std::move(points);
  return j;
}

json to_json(const KrausPair& k) {
  json e = json::array();
  for (const auto& m : k.e) e.push_back(to_json(m));
  json f = json::array();
  for (const auto& m : k.f) f.push_back(to_json(m));
  json j;
  j["n"] = k.n;
  j["scale"] = k.scale;
  j["rank"] = k.rank;
  j["block_width"] = k.block_width;
  j["E"] = std::move(e);
  j["F"] = std::move(f);
  return j;
}

std::vector<ComplexMatrix> span_set_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("matrices")) throw InvalidArgument("span set JSON needs a \"matrices\" array");
    list = &j["matrices"];
  }
  if (!list->is_array()) throw InvalidArgument("span set JSON must be an array of matrices");
  std::vector<ComplexMatrix> out;
  for (const auto& m : *list) out.push_back(matrix_from_json(m));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

}  // namespace nnsdist::json_io
