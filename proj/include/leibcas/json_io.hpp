#pragma once

#include <json.hpp>
#include <string>

#include "leibcas/equations.hpp"

namespace leibcas {

using json = nlohmann::ordered_json;

/// Algebra schema:
///   {"dim": n, "field": "Q" | {"gfp": p},
///    "brackets": [{"left": i, "right": j,
///                  "out": [{"k": k, "c": "num/den"}]}]}
/// Unlisted (i, j) pairs have zero bracket. Coefficients are exact-rational
/// strings; plain JSON integers are accepted too.
StructureAlgebra algebra_from_json(const json& j);
StructureAlgebra algebra_from_json_text(const std::string& text);
json algebra_to_json(const StructureAlgebra& a);

/// Scalar from a JSON string ("2/3") or integer.
Scalar scalar_from_json(const Field& f, const json& j);

Vec vec_from_json(const Field& f, std::size_t dim, const json& j);
json vec_to_json(const Vec& v);

/// {"basis": [[coords], ...]}
Subspace subspace_from_json(const Field& f, std::size_t ambient, const json& j);
json subspace_to_json(const Subspace& s);

json matrix_to_json(const Matrix& m);

/// System schema: {"vars": ["x","y"], "eqs": [term...], "neqs": [term...]}
/// with terms as ["br",t1,t2] | ["add",...] | ["smul","c",t] | ["var","x"]
/// | ["const",[coords]].
EqSystem system_from_json(const Field& f, std::size_t dim, const json& j);
json system_to_json(const EqSystem& s);

TermExpr term_from_json(const Field& f, std::size_t dim, const json& j);
json term_to_json(const TermExpr& t);

Assignment assignment_from_json(const Field& f, std::size_t dim, const json& j);
json assignment_to_json(const Assignment& a);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

}  // namespace leibcas
