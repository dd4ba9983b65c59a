#pragma once

#include <optional>
#include <vector>

#include "leibcas/matrix.hpp"

namespace leibcas {

/// Subspace of K^n held as a canonical reduced-echelon basis: pivot columns
/// strictly increase, pivot entries are 1 and alone in their column. Two equal
/// subspaces therefore have identical basis lists.
class Subspace {
 public:
  /// Zero subspace of the zero space; placeholder until assigned.
  Subspace() : field_(Field::rationals()), ambient_(0) {}

  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient,
                       const std::vector<Vec>& generators);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Remainder of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.
  Vec reduce(const Vec& v) const;

  /// Coordinates of v in this basis, when v lies in the subspace.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  /// Element with the given basis coordinates.
  Vec from_coordinates(const Vec& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// (n-dim) x n matrix Q with Q v = 0 iff v lies in the subspace: the
  /// non-pivot coordinates of reduce(v). Gives "lies in A" as linear
  /// conditions.
  Matrix quotient_map() const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  Field field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical form of {x : m x = 0}.
Subspace null_space(const Matrix& m);

}  // namespace leibcas
