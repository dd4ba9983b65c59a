#pragma once

#include <string>

namespace leibcas {

/// Coefficient field descriptor: the rationals or a prime field GF(p).
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }
  /// Requires p prime (checked), p >= 2.
  static Field gfp(unsigned long p);

  bool is_rationals() const { return p_ == 0; }
  /// 0 for the rationals, otherwise the prime.
  unsigned long prime() const { return p_; }

  bool operator==(const Field& other) const = default;

  std::string to_string() const;

  /// Parses "Q" or "gfp:<p>".
  static Field parse(const std::string& text);

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_prime_u64(unsigned long long n);

}  // namespace leibcas
