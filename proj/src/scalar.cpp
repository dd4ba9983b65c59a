#include "leibcas/scalar.hpp"

#include "leibcas/errors.hpp"

namespace leibcas {

namespace {

unsigned long mod_inverse(unsigned long a, unsigned long p) {
  if (a == 0) throw usage_error("division by zero in GF(" + std::to_string(p) + ")");
  // Extended Euclid on (a, p); p prime, so gcd is 1.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<unsigned long>(t);
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long mpz_residue(const mpz_class& z, unsigned long p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Scalar Scalar::of(const Field& f, long num, long den) {
  if (den == 0) throw usage_error("zero denominator");
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(num, den);
    s.rat_.canonicalize();
  } else {
    const unsigned long p = f.prime();
    mpz_class n(num), d(den);
    unsigned long dr = mpz_residue(d, p);
    if (dr == 0) throw usage_error("denominator vanishes in " + f.to_string());
    s.res_ = mulmod(mpz_residue(n, p), mod_inverse(dr, p), p);
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = q;
    s.rat_.canonicalize();
  } else {
    const unsigned long p = f.prime();
    unsigned long dr = mpz_residue(q.get_den(), p);
    if (dr == 0) throw usage_error("denominator vanishes in " + f.to_string());
    s.res_ = mulmod(mpz_residue(q.get_num(), p), mod_inverse(dr, p), p);
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw usage_error("empty scalar literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw usage_error("bad scalar literal: " + text);
  if (q.get_den() == 0) throw usage_error("zero denominator in scalar literal: " + text);
  q.canonicalize();
  return from_mpq(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw usage_error("mixed fields: " + field_.to_string() + " vs " +
                      o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rationals()) {
    rat_ += o.rat_;
  } else {
    const unsigned long p = field_.prime();
    res_ = (res_ + o.res_) % p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rationals()) {
    rat_ -= o.rat_;
  } else {
    const unsigned long p = field_.prime();
    res_ = (res_ + p - o.res_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rationals()) {
    rat_ *= o.rat_;
  } else {
    res_ = mulmod(res_, o.res_, field_.prime());
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.rat_ = -rat_;
  } else {
    const unsigned long p = field_.prime();
    r.res_ = res_ == 0 ? 0 : p - res_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw usage_error("inverse of zero");
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = mod_inverse(res_, field_.prime());
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
  return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw usage_error("not a rational scalar");
  return rat_;
}

unsigned long Scalar::residue() const {
  if (field_.is_rationals()) throw usage_error("not a GF(p) scalar");
  return res_;
}

}  // namespace leibcas
