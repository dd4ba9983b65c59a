#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "leibcas/subspace.hpp"

namespace leibcas {

/// One failing basis triple of the defining identity
/// [[x,y],z] = [[x,z],y] + [x,[y,z]], with both sides' coordinates.
struct LeibnizViolation {
  std::size_t i, j, k;
  Vec lhs, rhs;
};

struct LeibnizReport {
  bool ok = false;
  std::vector<LeibnizViolation> violations;
};

struct DerivedSeries {
  /// Terms starting at the whole algebra; each next term is the span of
  /// brackets of the previous one with itself. Ends at the first repeated or
  /// zero term.
  std::vector<Subspace> terms;
  bool solvable = false;
  std::size_t stabilization_index = 0;  // 1-based index of the final term
};

struct SimplicityVerdict {
  /// Literal reading: every detected ideal is 0, the derived ideal, or the
  /// whole algebra.
  bool simple = false;
  /// True when the line enumeration was exhaustive (prime fields); over the
  /// rationals only lines with coordinates in {-1,0,1} are tried and a
  /// positive verdict means "no counterexample found".
  bool complete = false;
  std::vector<std::string> warnings;
  std::size_t lines_checked = 0;
  std::optional<Subspace> counterexample_ideal;
  Subspace derived_ideal;
};

/// Finite-dimensional right Leibniz algebra given by structure constants:
/// bracket of basis vectors e_i, e_j is the stored coordinate vector c[i][j].
/// Immutable after construction; all operations are pure.
class StructureAlgebra {
 public:
  /// All-zero bracket table (abelian algebra).
  StructureAlgebra(const Field& f, std::size_t dim);
  /// Entries are (i, j, coords of [e_i, e_j]); unspecified pairs stay zero.
  StructureAlgebra(const Field& f, std::size_t dim,
                   const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& entries);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Vec& basis_bracket(std::size_t i, std::size_t j) const;

  Vec element(std::size_t i) const { return vec_unit(field_, dim_, i); }
  Vec zero_element() const { return vec_zero(field_, dim_); }

  /// Bilinear expansion of the bracket through the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of x -> [x, z] (right multiplication by z).
  Matrix right_mult(const Vec& z) const;
  /// Matrix of x -> [z, x] (left multiplication by z).
  Matrix left_mult(const Vec& z) const;

  /// Checks the identity on all dim^3 basis triples (complete by
  /// trilinearity). Result is cached.
  const LeibnizReport& verify_leibniz() const;
  bool is_leibniz() const { return verify_leibniz().ok; }

  Subspace subalgebra_generated(const std::vector<Vec>& gens) const;
  Subspace ideal_closure(const std::vector<Vec>& gens) const;

  bool is_subalgebra(const Subspace& v) const;
  bool is_left_ideal(const Subspace& v) const;
  bool is_right_ideal(const Subspace& v) const;
  bool is_ideal(const Subspace& v) const;

  DerivedSeries derived_series() const;

  /// Line-enumeration simplicity test; see SimplicityVerdict for the
  /// completeness caveats.
  SimplicityVerdict is_simple() const;

  /// Structure constants of a bracket-closed subspace in its canonical basis.
  StructureAlgebra subalgebra_structure(const Subspace& a) const;

  /// Reinterprets the structure constants over another field (rational
  /// constants are mapped into GF(p); fails if a denominator vanishes).
  StructureAlgebra change_field(const Field& f) const;

  bool operator==(const StructureAlgebra& other) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vec> c_;  // c_[i * dim + j] = [e_i, e_j]
  mutable std::optional<LeibnizReport> verify_cache_;
};

StructureAlgebra direct_product(const StructureAlgebra& a, const StructureAlgebra& b);

struct ExtensionResult {
  std::optional<StructureAlgebra> algebra;  // present iff report.ok
  LeibnizReport report;
};

/// (n+1)-dimensional algebra adjoining t to a with [x, t] = d(x),
/// [t, x] = -dm(x), [t, t] = 0, accepted only if the Leibniz identity holds
/// on all basis triples (construct-then-verify).
ExtensionResult one_dim_extension(const StructureAlgebra& a, const Matrix& d,
                                  const Matrix& dm);

}  // namespace leibcas
