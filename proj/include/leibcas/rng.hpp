#pragma once

#include <cstdint>

#include "leibcas/matrix.hpp"

namespace leibcas {

/// splitmix64 generator. Self-contained so that seeded runs produce identical
/// streams on every platform (std:: distributions do not guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Small integer in [-range, range].
  long small_int(long range) {
    return static_cast<long>(below(static_cast<std::uint64_t>(2 * range + 1))) - range;
  }

  Scalar scalar(const Field& f, long range = 3) {
    if (f.is_rationals()) return Scalar::of(f, small_int(range));
    return Scalar::of(f, static_cast<long>(below(f.prime())));
  }

  Scalar nonzero_scalar(const Field& f, long range = 3) {
    for (;;) {
      Scalar s = scalar(f, range);
      if (!s.is_zero()) return s;
    }
  }

  Vec element(const Field& f, std::size_t n, long range = 3) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, range));
    return v;
  }

  Vec nonzero_element(const Field& f, std::size_t n, long range = 3) {
    for (;;) {
      Vec v = element(f, n, range);
      if (!vec_is_zero(v)) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace leibcas
