#pragma once

#include <gmpxx.h>

#include <string>

#include "leibcas/field.hpp"

namespace leibcas {

/// Exact field element: an arbitrary-precision rational or a GF(p) residue.
/// Rationals are kept in lowest terms with positive denominator; residues in
/// [0, p). All arithmetic is exact; mixing fields is a usage error.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), res_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar of(const Field& f, long num, long den = 1);
  static Scalar from_mpq(const Field& f, const mpq_class& q);
  /// Parses "n", "-n", "n/d" as an element of f (denominator inverted mod p
  /// over prime fields).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // usage_error on zero
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "-3/4", "7", or the residue for GF(p).
  std::string to_string() const;

  /// The rational value; only valid over the rationals.
  const mpq_class& rational() const;
  /// The residue in [0, p); only valid over GF(p).
  unsigned long residue() const;

 private:
  explicit Scalar(const Field& f) : field_(f), res_(0) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;      // engaged iff field is the rationals
  unsigned long res_;  // engaged iff field is GF(p)
};

}  // namespace leibcas
