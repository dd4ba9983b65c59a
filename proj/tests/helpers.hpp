#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "leibcas/json_io.hpp"

namespace testutil {

using namespace leibcas;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(LEIBCAS_FIXTURES_DIR) + "/" + name + ".json";
}

inline StructureAlgebra load_fixture(const std::string& name) {
  return algebra_from_json_text(read_file(fixture_path(name)));
}

inline std::vector<std::string> fixture_names() {
  return {"abelian1", "abelian2", "abelian3", "abelian4", "n2", "solv3", "sl2"};
}

inline Scalar q(long num, long den = 1) {
  return Scalar::of(Field::rationals(), num, den);
}

inline Vec qvec(std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(q(e));
  return v;
}

// Second, deliberately naive bracket expansion used as an oracle against the
// library's own. Indexes the raw constants directly.
inline Vec oracle_bracket(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  Vec out = vec_zero(a.field(), a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        acc += x[i] * y[j] * a.basis_bracket(i, j)[k];
      }
    }
    out[k] = acc;
  }
  return out;
}

// Hand-oracle for the defining identity at one basis triple.
inline bool oracle_identity_holds(const StructureAlgebra& a, std::size_t i,
                                  std::size_t j, std::size_t k) {
  Vec ei = a.element(i), ej = a.element(j), ek = a.element(k);
  Vec lhs = oracle_bracket(a, oracle_bracket(a, ei, ej), ek);
  Vec rhs = vec_add(oracle_bracket(a, oracle_bracket(a, ei, ek), ej),
                    oracle_bracket(a, ei, oracle_bracket(a, ej, ek)));
  return lhs == rhs;
}

}  // namespace testutil
