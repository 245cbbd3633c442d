#pragma once

#include "vfilt/filtration.hpp"
#include "vfilt/report.hpp"
#include "vfilt/spanning.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace vfilt {

using Json = nlohmann::ordered_json;

/// {"kind": "heisenberg"} or {"kind": "lattice", "gram": N}.
Json preset_to_json(const AlgebraPreset& preset);
AlgebraPreset preset_from_json(const Json& j);

/// Always "p/q" in lowest terms (denominator 1 included).
std::string coefficient_to_string(const Scalar& c);
/// Accepts "p/q" or "p"; throws invalid_argument on anything else or q = 0.
Scalar coefficient_from_string(std::string_view text);

/// {"preset": {...}, "terms": [{"hpart": [...], "lpoint": m, "coef": "p/q"}]}
/// with terms in the global monomial order.
Json state_to_json(const AlgebraPreset& preset, const State& s);

struct TaggedState {
  AlgebraPreset preset;
  State state;
};
/// Validates partitions, lattice points and coefficients; duplicate
/// monomials are summed.
TaggedState state_from_json(const Json& j);

/// A JSON list of state payloads, or {"vectors": [...], "order": [...]}.
/// Every payload must carry `preset`.
GeneratorSet generators_from_json(const Json& j, const AlgebraPreset& preset);

Json table_to_json(const FiltrationTable& t);
/// Columns: quantity, n, then one per weight. One "ambient" row, then a
/// "dim" and a "quotient" row per n.
std::string table_to_csv(const FiltrationTable& t);
std::string table_to_markdown(const FiltrationTable& t);

/// {"schema_version": 1, "preset", "config", "summary", "checks": [...]}.
Json report_to_json(const VerificationReport& report, const AlgebraPreset& preset, const Json& config);
std::string report_to_markdown(const Json& report);

}  // namespace vfilt
