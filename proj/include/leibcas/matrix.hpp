#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leibcas/scalar.hpp"

namespace leibcas {

/// Coordinate vector over one field.
using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, std::size_t n);
Vec vec_unit(const Field& f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
Vec vec_neg(const Vec& v);

/// Dense row-major matrix over an exact field. Values are immutable from the
/// caller's point of view once built; mutating accessors exist for builders.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows,
                          std::size_t cols);
  static Matrix from_columns(const Field& f, const std::vector<Vec>& cols,
                             std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  Scalar& at(std::size_t i, std::size_t j);

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  /// Matrix-vector product; x has length cols().
  Vec apply(const Vec& x) const;

  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form via exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution of m*x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

struct SolveCertificate {
  std::optional<Vec> solution;
  /// On inconsistency: y with y^T m = 0 but y^T b != 0 (the contradictory
  /// combination of the input equations).
  std::optional<Vec> infeasibility;
};

SolveCertificate solve_with_certificate(const Matrix& m, const Vec& b);

/// Basis of {x : m*x = 0}, one vector per free column (not canonicalized).
std::vector<Vec> kernel_basis(const Matrix& m);

}  // namespace leibcas
