#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "leibcas/algebra.hpp"

namespace leibcas {

/// Left-normed bracket monomial: the word (i1 i2 ... ik) denotes
/// [[...[x_{i1}, x_{i2}], ...], x_{ik}]. Ordered by degree, then
/// lexicographically.
struct Monomial {
  std::vector<std::uint32_t> word;

  std::size_t degree() const { return word.size(); }

  bool operator==(const Monomial& o) const = default;
  bool operator<(const Monomial& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
  bool operator>(const Monomial& o) const { return o < *this; }
};

/// Element of the free right Leibniz algebra on indexed generators, kept in
/// normal form: a finite sum of left-normed monomials with nonzero
/// coefficients.
class FreeElement {
 public:
  explicit FreeElement(const Field& f) : field_(f) {}

  static FreeElement zero(const Field& f) { return FreeElement(f); }
  static FreeElement generator(const Field& f, std::uint32_t i);
  static FreeElement monomial(const Field& f, Monomial m, Scalar c);

  const Field& field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest monomial degree present; 0 for the zero element.
  std::size_t degree() const;
  std::size_t min_degree() const;

  /// Largest (degree, lex) monomial; element must be nonzero.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Monomial& m, const Scalar& c);

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator-() const;
  FreeElement scaled(const Scalar& c) const;
  bool operator==(const FreeElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

  /// Highest generator index used plus one (0 for the zero element).
  std::uint32_t generators_used() const;

  /// Rendering like "(x1 x2 x3) - 2*(x1 x3 x2)"; index i prints as names[i]
  /// when provided, else as x<i+1>.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Field field_;
  std::map<Monomial, Scalar> terms_;
};

/// Exact bilinear bracket. On monomials: appending the letter when the right
/// factor has degree 1, else recursing through
/// [u, [v', z]] = [[u, v'], z] - [[u, z], v'].
FreeElement free_bracket(const FreeElement& u, const FreeElement& v);

/// Same recursion, discarding every monomial whose degree exceeds `cap`.
FreeElement free_bracket_truncated(const FreeElement& u, const FreeElement& v,
                                   std::size_t cap);

/// All generator-count^degree words of the given length, lexicographic.
std::vector<Monomial> graded_basis(std::size_t generators, std::size_t degree);

/// Drops all monomials of degree > n.
FreeElement truncate(const FreeElement& e, std::size_t n);

/// Image under the homomorphism sending generator i to assignment[i]; words
/// evaluate as iterated brackets in the target.
Vec evaluate(const FreeElement& e, const StructureAlgebra& target,
             const std::vector<Vec>& assignment);

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>& names = {});

}  // namespace leibcas
