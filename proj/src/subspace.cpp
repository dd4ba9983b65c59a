#include "leibcas/subspace.hpp"

#include "leibcas/errors.hpp"

namespace leibcas {

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(f, ambient);
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(vec_unit(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient,
                        const std::vector<Vec>& generators) {
  for (const Vec& g : generators) {
    if (g.size() != ambient) throw usage_error("generator length mismatch");
  }
  Subspace s(f, ambient);
  if (generators.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(f, generators, ambient));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    s.basis_.push_back(r.reduced.row(i));
    s.pivots_.push_back(r.pivots[i]);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw usage_error("ambient dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw usage_error("ambient dimension mismatch");
  for (const Vec& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw usage_error("ambient dimension mismatch");
  Vec coords;
  coords.reserve(basis_.size());
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw usage_error("coordinate length mismatch");
  Vec v = vec_zero(field_, ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_[i][j];
  }
  return v;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_)) {
    throw usage_error("subspace sum: ambient/field mismatch");
  }
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_)) {
    throw usage_error("subspace intersection: ambient/field mismatch");
  }
  // x in U cap V iff x = sum a_i u_i = sum b_j v_j; solve for (a, b) in the
  // kernel of [U^T | -V^T] and read the U-part.
  const std::size_t k = dim(), m = other.dim();
  if (k == 0 || m == 0) return zero(field_, ambient_);
  Matrix stacked(field_, ambient_, k + m);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) stacked.at(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < ambient_; ++i)
      stacked.at(i, k + j) = -other.basis_[j][i];
  std::vector<Vec> gens;
  for (const Vec& ab : kernel_basis(stacked)) {
    Vec x = vec_zero(field_, ambient_);
    for (std::size_t j = 0; j < k; ++j) {
      if (ab[j].is_zero()) continue;
      for (std::size_t i = 0; i < ambient_; ++i) x[i] += ab[j] * basis_[j][i];
    }
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_, gens);
}

Matrix Subspace::quotient_map() const {
  const std::size_t k = dim();
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  Matrix q(field_, ambient_ - k, ambient_);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient_; ++col) {
    if (is_pivot[col]) continue;
    // Row r of q reads off coordinate `col` of reduce(v).
    q.at(r, col) = Scalar::one(field_);
    for (std::size_t i = 0; i < k; ++i) q.at(r, pivots_[i]) = -basis_[i][col];
    ++r;
  }
  return q;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && field_ == other.field_ &&
         pivots_ == other.pivots_ && basis_ == other.basis_;
}

Subspace null_space(const Matrix& m) {
  return Subspace::span(m.field(), m.cols(), kernel_basis(m));
}

}  // namespace leibcas
