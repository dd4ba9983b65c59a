#include "leibcas/json_io.hpp"

#include <algorithm>

#include "leibcas/errors.hpp"

namespace leibcas {

namespace {

json scalar_to_json(const Scalar& s) { return s.to_string(); }

}  // namespace

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
  throw usage_error("scalar must be a string like \"2/3\" or an integer");
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Q" || s == "q") return Field::rationals();
    throw usage_error("unknown field name: " + s);
  }
  if (j.is_object() && j.contains("gfp")) {
    return Field::gfp(j.at("gfp").get<unsigned long>());
  }
  throw usage_error("field must be \"Q\" or {\"gfp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_rationals()) return json("Q");
  json j;
  j["gfp"] = f.prime();
  return j;
}

StructureAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw usage_error("algebra JSON must be an object");
  if (!j.contains("dim")) throw usage_error("algebra JSON needs \"dim\"");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const Field f = j.contains("field") ? field_from_json(j.at("field"))
                                      : Field::rationals();
  std::vector<std::tuple<std::size_t, std::size_t, Vec>> entries;
  if (j.contains("brackets")) {
    for (const json& entry : j.at("brackets")) {
      const std::size_t left = entry.at("left").get<std::size_t>();
      const std::size_t right = entry.at("right").get<std::size_t>();
      if (left >= dim || right >= dim) {
        throw usage_error("bracket index out of range in algebra JSON");
      }
      Vec out = vec_zero(f, dim);
      for (const json& term : entry.at("out")) {
        const std::size_t k = term.at("k").get<std::size_t>();
        if (k >= dim) throw usage_error("output index out of range in algebra JSON");
        out[k] += scalar_from_json(f, term.at("c"));
      }
      entries.emplace_back(left, right, std::move(out));
    }
  }
  return StructureAlgebra(f, dim, entries);
}

StructureAlgebra algebra_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("malformed algebra JSON");
  return algebra_from_json(j);
}

json algebra_to_json(const StructureAlgebra& a) {
  json j;
  j["dim"] = a.dim();
  j["field"] = field_to_json(a.field());
  json brackets = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec& out = a.basis_bracket(i, k);
      if (vec_is_zero(out)) continue;
      json entry;
      entry["left"] = i;
      entry["right"] = k;
      json terms = json::array();
      for (std::size_t r = 0; r < out.size(); ++r) {
        if (out[r].is_zero()) continue;
        json term;
        term["k"] = r;
        term["c"] = scalar_to_json(out[r]);
        terms.push_back(std::move(term));
      }
      entry["out"] = std::move(terms);
      brackets.push_back(std::move(entry));
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

Vec vec_from_json(const Field& f, std::size_t dim, const json& j) {
  if (!j.is_array() || j.size() != dim) {
    throw usage_error("vector JSON must be an array of length " +
                      std::to_string(dim));
  }
  Vec v;
  v.reserve(dim);
  for (const json& c : j) v.push_back(scalar_from_json(f, c));
  return v;
}

json vec_to_json(const Vec& v) {
  json j = json::array();
  for (const Scalar& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Subspace subspace_from_json(const Field& f, std::size_t ambient, const json& j) {
  const json& basis = j.is_object() ? j.at("basis") : j;
  if (!basis.is_array()) throw usage_error("subspace JSON needs a basis array");
  std::vector<Vec> gens;
  for (const json& row : basis) gens.push_back(vec_from_json(f, ambient, row));
  return Subspace::span(f, ambient, gens);
}

json subspace_to_json(const Subspace& s) {
  json j;
  j["dim"] = s.dim();
  json basis = json::array();
  for (const Vec& b : s.basis()) basis.push_back(vec_to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

TermExpr term_from_json(const Field& f, std::size_t dim, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) {
    throw usage_error("term JSON must be a tagged array");
  }
  const std::string tag = j[0].get<std::string>();
  if (tag == "var") {
    if (j.size() != 2) throw usage_error("[\"var\", name] takes one argument");
    return TermExpr::variable(j[1].get<std::string>());
  }
  if (tag == "const") {
    if (j.size() != 2) throw usage_error("[\"const\", coords] takes one argument");
    return TermExpr::constant(vec_from_json(f, dim, j[1]));
  }
  if (tag == "br") {
    if (j.size() != 3) throw usage_error("[\"br\", t1, t2] takes two arguments");
    return TermExpr::bracket(term_from_json(f, dim, j[1]),
                             term_from_json(f, dim, j[2]));
  }
  if (tag == "add") {
    std::vector<TermExpr> parts;
    for (std::size_t i = 1; i < j.size(); ++i) {
      parts.push_back(term_from_json(f, dim, j[i]));
    }
    return TermExpr::sum(std::move(parts));
  }
  if (tag == "smul") {
    if (j.size() != 3) throw usage_error("[\"smul\", c, t] takes two arguments");
    return TermExpr::scalar_multiple(scalar_from_json(f, j[1]),
                                     term_from_json(f, dim, j[2]));
  }
  throw usage_error("unknown term tag: " + tag);
}

json term_to_json(const TermExpr& t) {
  json j = json::array();
  switch (t.kind()) {
    case TermExpr::Kind::variable:
      j.push_back("var");
      j.push_back(t.var_name());
      break;
    case TermExpr::Kind::constant:
      j.push_back("const");
      j.push_back(vec_to_json(t.const_coords()));
      break;
    case TermExpr::Kind::bracket:
      j.push_back("br");
      j.push_back(term_to_json(t.children()[0]));
      j.push_back(term_to_json(t.children()[1]));
      break;
    case TermExpr::Kind::sum:
      j.push_back("add");
      for (const TermExpr& c : t.children()) j.push_back(term_to_json(c));
      break;
    case TermExpr::Kind::scalar_multiple:
      j.push_back("smul");
      j.push_back(t.factor().to_string());
      j.push_back(term_to_json(t.children()[0]));
      break;
  }
  return j;
}

EqSystem system_from_json(const Field& f, std::size_t dim, const json& j) {
  EqSystem s;
  if (!j.is_object()) throw usage_error("system JSON must be an object");
  if (j.contains("vars")) {
    for (const json& v : j.at("vars")) s.vars.push_back(v.get<std::string>());
  }
  if (j.contains("eqs")) {
    for (const json& t : j.at("eqs")) s.equations.push_back(term_from_json(f, dim, t));
  }
  if (j.contains("neqs")) {
    for (const json& t : j.at("neqs")) s.inequations.push_back(term_from_json(f, dim, t));
  }
  // Variables used but not declared are appended in sorted order.
  std::vector<std::string> seen = s.vars;
  auto note = [&](const TermExpr& t) {
    for (const std::string& v : t.variables()) {
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  };
  for (const TermExpr& t : s.equations) note(t);
  for (const TermExpr& t : s.inequations) note(t);
  s.vars = std::move(seen);
  return s;
}

json system_to_json(const EqSystem& s) {
  json j;
  j["vars"] = s.vars;
  json eqs = json::array();
  for (const TermExpr& t : s.equations) eqs.push_back(term_to_json(t));
  j["eqs"] = std::move(eqs);
  json neqs = json::array();
  for (const TermExpr& t : s.inequations) neqs.push_back(term_to_json(t));
  j["neqs"] = std::move(neqs);
  return j;
}

Assignment assignment_from_json(const Field& f, std::size_t dim, const json& j) {
  if (!j.is_object()) throw usage_error("assignment JSON must be an object");
  Assignment a;
  for (const auto& [key, value] : j.items()) {
    a[key] = vec_from_json(f, dim, value);
  }
  return a;
}

json assignment_to_json(const Assignment& a) {
  json j;
  for (const auto& [name, v] : a) j[name] = vec_to_json(v);
  return j;
}

}  // namespace leibcas
