#include "leibcas/matrix.hpp"

#include <algorithm>

#include "leibcas/errors.hpp"

namespace leibcas {

Vec vec_zero(const Field& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec vec_unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw usage_error("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw usage_error("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& s : r) s *= c;
  return r;
}

Vec vec_neg(const Vec& v) {
  Vec r = v;
  for (auto& s : r) s = -s;
  return r;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw usage_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vec>& cols,
                            std::size_t rows) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw usage_error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  return data_.at(i * cols_ + j);
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  return data_.at(i * cols_ + j);
}

Vec Matrix::row(std::size_t i) const {
  Vec r(data_.begin() + static_cast<long>(i * cols_),
        data_.begin() + static_cast<long>((i + 1) * cols_));
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw usage_error("matrix shape mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.data_) s = -s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         data_ == o.data_;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.data_) s *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw usage_error("vector length mismatch in apply");
  Vec y = vec_zero(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < a.cols() && pr < a.rows(); ++col) {
    std::size_t sel = pr;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pr, j));
    }
    const Scalar inv = a.at(pr, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pr, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pr || a.at(i, col).is_zero()) continue;
      const Scalar factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) -= factor * a.at(pr, j);
      }
    }
    pivots.push_back(col);
    ++pr;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  return solve_with_certificate(m, b).solution;
}

SolveCertificate solve_with_certificate(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw usage_error("rhs length mismatch in solve");
  const Field& f = m.field();
  // Augment with b and with the identity to track the row transformation.
  Matrix aug(f, m.rows(), m.cols() + 1 + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
    aug.at(i, m.cols() + 1 + i) = Scalar::one(f);
  }
  // Eliminate on the first cols() columns only.
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < aug.rows(); ++col) {
    std::size_t sel = pr;
    while (sel < aug.rows() && aug.at(sel, col).is_zero()) ++sel;
    if (sel == aug.rows()) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(sel, j), aug.at(pr, j));
    }
    const Scalar inv = aug.at(pr, col).inverse();
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(pr, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == pr || aug.at(i, col).is_zero()) continue;
      const Scalar factor = aug.at(i, col);
      for (std::size_t j = 0; j < aug.cols(); ++j) {
        aug.at(i, j) -= factor * aug.at(pr, j);
      }
    }
    pivots.push_back(col);
    ++pr;
  }
  // Inconsistent row: all-zero coefficients with nonzero rhs.
  for (std::size_t i = pr; i < aug.rows(); ++i) {
    if (!aug.at(i, m.cols()).is_zero()) {
      Vec cert;
      cert.reserve(m.rows());
      for (std::size_t j = 0; j < m.rows(); ++j) cert.push_back(aug.at(i, m.cols() + 1 + j));
      return {std::nullopt, std::move(cert)};
    }
  }
  Vec x = vec_zero(f, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return {std::move(x), std::nullopt};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = vec_zero(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v[r.pivots[i]] = -r.reduced.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace leibcas
