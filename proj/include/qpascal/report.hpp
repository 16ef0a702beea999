#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qpascal/braidrep.hpp"
#include "qpascal/invariance.hpp"

namespace qpascal {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kEngineVersion = "1.0.0";

using Json = nlohmann::ordered_json;

// Field elements serialise as canonical strings; with raw set they become
// {"text", "conductor", "coeffs"} (or numerator/denominator coefficient lists
// for rational functions).
Json to_json(const FieldElem& x, bool raw = false);
Json to_json(const ExactVector& v, bool raw = false);
Json to_json(const ExactMatrix& m, bool raw = false);
// {"text", "var", "coefficients"} with coefficients lowest degree first.
Json to_json(const CycPoly& p, bool raw = false);

Json to_json(const RepParams& p, bool raw = false);
Json to_json(const BraidRep& rep, bool raw = false);
Json to_json(const SubspacePattern& p);
Json to_json(const Verdict& v, bool raw = false);
Json to_json(const Theorem36Result& r, bool raw = false);
Json to_json(const RestrictedRep& r, bool raw = false);
Json to_json(const Theorem41Result& r, bool raw = false);
Json to_json(const OperatorCriterion& c, bool raw = false);

// Inverses of the string forms above.
FieldElem field_from_json(const Json& j);
ExactMatrix matrix_from_json(const Json& j);

// Process exit code for an error: 2 input errors, 3 constraint violations,
// 1 internal failures.
int exit_code_for(ErrorCode code);

// Indented key/value rendering of a report for terminals.
std::string render_text(const Json& report);

}  // namespace qpascal
