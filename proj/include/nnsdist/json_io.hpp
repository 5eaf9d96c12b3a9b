#pragma once

// JSON encodings of the report types. Complex matrices travel as
// {"rows": r, "cols": c, "data": [re, im, re, im, ...]} in row-major order.

#include <map>
#include <string>

#include "json.hpp"
#include "nnsdist/catalog.hpp"
#include "nnsdist/channel.hpp"
#include "nnsdist/feasibility.hpp"

namespace nnsdist::json_io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const ComplexMatrix& m);
// Throws InvalidArgument on malformed input.
ComplexMatrix matrix_from_json(const json& j);

json to_json(const ReducedVector& y);
json to_json(const VerificationReport& r);
json to_json(const FeasibilityOutcome& outcome, const PhaseAngle& alpha, int order);
json to_json(const Probe& p);
json to_json(const ThresholdEstimate& t);
json to_json(const NecessityReport& r);
json to_json(const KrausPair& k);

// {"matrices": [...]} or a bare array of matrices.
std::vector<ComplexMatrix> span_set_from_json(const json& j);

// Shortest decimal that round-trips; keeps reports byte-stable.
std::string format_double(double v);

}  // namespace nnsdist::json_io
