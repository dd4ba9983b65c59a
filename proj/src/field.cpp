#include "leibcas/field.hpp"

#include "leibcas/errors.hpp"

namespace leibcas {

namespace {

unsigned long long mulmod_u64(unsigned long long a, unsigned long long b,
                              unsigned long long m) {
  return static_cast<unsigned long long>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long long powmod_u64(unsigned long long base, unsigned long long exp,
                              unsigned long long m) {
  unsigned long long acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  unsigned long long d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
    unsigned long long x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::gfp(unsigned long p) {
  if (!is_prime_u64(p)) {
    throw usage_error("GF(p) requires a prime modulus, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.rfind("gfp:", 0) == 0) {
    try {
      return gfp(std::stoul(text.substr(4)));
    } catch (const usage_error&) {
      throw;
    } catch (const std::exception&) {
      throw usage_error("bad field spec: " + text);
    }
  }
  throw usage_error("bad field spec: " + text + " (expected Q or gfp:<p>)");
}

}  // namespace leibcas
