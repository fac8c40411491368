#pragma once

// JSON documents read and written by the command-line tool and the Python
// module. Rationals travel as strings ("-3/4") or JSON integers; polynomials
// as ascending coefficient arrays or infix strings.

#include <json.hpp>

#include "csa/charpoly.hpp"
#include "csa/classes.hpp"
#include "csa/factor.hpp"
#include "csa/local_split.hpp"
#include "csa/quaternion.hpp"

namespace csa {

using Json = nlohmann::ordered_json;

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);

/// ["1", "0", "1"] or "t^2+1".
RatPoly poly_from_json(const Json& j);
Json poly_to_json(const RatPoly& p);

/// { "capacity": n, "invariants": [ {"place": "2", "value": "1/2"}, ... ] },
/// optionally with "base": "abstract" (places are then free labels), or
/// { "quaternion": {"a": "-1", "b": "-1"}, "capacity": n }. Validated.
CsaSpec algebra_from_json(const Json& j);
Json algebra_to_json(const CsaSpec& spec);
/// The (a, b) of a quaternion shorthand document.
QuatAlgebra quaternion_from_json(const Json& j);

/// [ {"poly": [...], "place": "2", "local_degrees": [2]}, ... ]
SplittingOverride override_from_json(const Json& j, bool abstract_base);
Json override_to_json(const SplittingOverride& ov);

/// { "assignments": [ {"poly": [...], "partition": [2, 1]}, ... ] }
ClassInvariant class_from_json(const Json& j);
Json class_to_json(const ClassInvariant& lam);

/// { "factors": [ {"poly": [...], "multiplicity": 2}, ... ] }
Factorization factorization_from_json(const Json& j);
Json factorization_to_json(const Factorization& f);

/// { "algebra": {"a": "-1", "b": "-1"}, "n": 2, "entries": [[["w","x","y","z"], ...], ...] }
struct MatrixDocument {
    QuatAlgebra algebra;
    QuatMat matrix;
};
MatrixDocument matrix_from_json(const Json& j);
Json matrix_to_json(const QuatAlgebra& alg, const QuatMat& m);

Json splitting_to_json(const SplittingType& s);
Json verdict_to_json(const CharPolyVerdict& v);
/// One sentence per factor naming conditions (a) and (b).
std::vector<std::string> explain_verdict(const CharPolyVerdict& v);
Json rcf_to_json(const std::vector<RcfBlock>& blocks);
Json invariants_to_json(const ElementInvariants& inv);

}  // namespace csa
