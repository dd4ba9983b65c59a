#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibcas/algebra.hpp"

namespace leibcas {

/// Row-major flattening used for spaces of linear maps: entry (r, s) of an
/// n x n map sits at coordinate r*n + s.
Vec vectorize_map(const Matrix& m);
Matrix map_from_vec(const Field& f, std::size_t n, const Vec& v);

/// d([x,y]) = [d(x),y] + [x,d(y)] on all basis pairs.
bool is_derivation(const StructureAlgebra& a, const Matrix& d);
/// d'([x,y]) = [d'(x),y] - [d'(y),x] on all basis pairs.
bool is_antiderivation(const StructureAlgebra& a, const Matrix& d);

/// Canonical solution space of the derivation conditions, inside K^(n^2).
Subspace derivation_space(const StructureAlgebra& a);
Subspace antiderivation_space(const StructureAlgebra& a);

/// Pairs (d, D) with d a derivation, D an anti-derivation, and
/// [l, d(l')] = [l, D(l')]; ambient K^(2 n^2), d-part first.
Subspace biderivation_space(const StructureAlgebra& a);

struct PairViolation {
  std::string equation;  // which of the three defining conditions failed
  std::size_t i, j;
  Vec lhs, rhs;
};

/// First failing condition of the (d, D) pair laws, or nullopt if valid.
std::optional<PairViolation> pair_check(const StructureAlgebra& a,
                                        const Matrix& d, const Matrix& dd);

/// Validated (d, D) pair. Construction checks the three defining conditions.
class Biderivation {
 public:
  static Biderivation make(const StructureAlgebra& a, Matrix d, Matrix dd);

  const Matrix& d() const { return d_; }
  const Matrix& dd() const { return dd_; }
  Vec vectorized() const;

  bool operator==(const Biderivation& o) const { return d_ == o.d_ && dd_ == o.dd_; }

 private:
  Biderivation(Matrix d, Matrix dd) : d_(std::move(d)), dd_(std::move(dd)) {}
  Matrix d_, dd_;
};

/// [(d1,D1),(d2,D2)] = (d1 d2 - d2 d1, D1 d2 - d2 D1); the result is
/// re-validated and an invariant_violation is raised if it fails (it cannot
/// for valid inputs).
Biderivation bider_bracket(const StructureAlgebra& a, const Biderivation& p1,
                           const Biderivation& p2);

/// (ad(l), Ad(l)) with ad(l): x -> -[x,l] and Ad(l): x -> [l,x].
Biderivation inner_biderivation(const StructureAlgebra& a, const Vec& l);

struct Restriction {
  std::optional<Matrix> on_subspace;  // k x k in the subspace basis
  std::optional<Vec> escape_witness;  // image vector outside the subspace
  std::size_t witness_basis_index = 0;
};

/// Expresses m in a's basis if m maps a into itself, else reports a witness.
Restriction restrict_map(const StructureAlgebra& alg, const Subspace& a,
                         const Matrix& m);

/// Linear map defined on a subspace of the algebra, valued in the whole
/// algebra: column s of `images` is the image of the s-th canonical basis
/// vector of `domain`.
struct MapOnSubspace {
  Subspace domain;
  Matrix images;  // dim(algebra) x dim(domain)

  Vec apply(const Vec& x) const;
};

enum class MapKind { derivation, anti_derivation };

/// Defining law of `kind` checked on all basis pairs of the domain (which
/// must be bracket-closed).
bool satisfies_law_on_domain(const StructureAlgebra& a, const MapOnSubspace& m,
                             MapKind kind);

struct AssignmentResult {
  std::optional<MapOnSubspace> map;
  /// On failure: combination of the constraint equations that reduces to
  /// 0 = nonzero, plus a rendering of it.
  std::optional<Vec> contradiction;
  std::string detail;
};

/// Smallest bracket-closed subspace containing the assignment sources, and a
/// map of `kind` on it with map(x_i) = y_i, when the linear constraints are
/// consistent. With span_only the domain is just the linear span of the
/// sources (which must then be bracket-closed).
AssignmentResult map_from_assignment(const StructureAlgebra& a,
                                     const std::vector<std::pair<Vec, Vec>>& gens,
                                     MapKind kind, bool span_only = false);

}  // namespace leibcas
