#include "leibcas/free_leibniz.hpp"

#include <algorithm>

#include "leibcas/errors.hpp"

namespace leibcas {

FreeElement FreeElement::generator(const Field& f, std::uint32_t i) {
  return monomial(f, Monomial{{i}}, Scalar::one(f));
}

FreeElement FreeElement::monomial(const Field& f, Monomial m, Scalar c) {
  if (m.word.empty()) throw usage_error("monomials must be nonempty words");
  FreeElement e(f);
  e.add_term(m, c);
  return e;
}

std::size_t FreeElement::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::size_t FreeElement::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

const Monomial& FreeElement::leading_monomial() const {
  if (terms_.empty()) throw usage_error("zero element has no leading monomial");
  return terms_.rbegin()->first;
}

const Scalar& FreeElement::leading_coefficient() const {
  if (terms_.empty()) throw usage_error("zero element has no leading coefficient");
  return terms_.rbegin()->second;
}

void FreeElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  FreeElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

FreeElement FreeElement::operator-() const {
  FreeElement r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  FreeElement r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

std::uint32_t FreeElement::generators_used() const {
  std::uint32_t hi = 0;
  for (const auto& [m, c] : terms_) {
    for (std::uint32_t g : m.word) hi = std::max(hi, g + 1);
  }
  return hi;
}

namespace {

// Bracket of two monomials, recursing on the right factor's length.
// cap == 0 means no truncation.
void bracket_monomials(const Field& f, const Monomial& u, const Monomial& v,
                       const Scalar& coeff, std::size_t cap, FreeElement& out) {
  if (cap != 0 && u.degree() + v.degree() > cap) return;
  if (v.degree() == 1) {
    Monomial joined = u;
    joined.word.push_back(v.word[0]);
    out.add_term(joined, coeff);
    return;
  }
  // v = [v', z]: [u, v] = [[u, v'], z] - [[u, z], v']
  Monomial vp = v;
  const std::uint32_t z = vp.word.back();
  vp.word.pop_back();
  Monomial uz = u;
  uz.word.push_back(z);
  // [[u, v'], z]: first bracket u with v', then append z to every word.
  FreeElement uvp(f);
  bracket_monomials(f, u, vp, coeff, cap, uvp);
  for (const auto& [m, c] : uvp.terms()) {
    Monomial mz = m;
    mz.word.push_back(z);
    if (cap == 0 || mz.degree() <= cap) out.add_term(mz, c);
  }
  bracket_monomials(f, uz, vp, -coeff, cap, out);
}

FreeElement bracket_impl(const FreeElement& u, const FreeElement& v,
                         std::size_t cap) {
  if (!(u.field() == v.field())) throw usage_error("mixed fields in bracket");
  FreeElement out(u.field());
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      bracket_monomials(u.field(), mu, mv, cu * cv, cap, out);
    }
  }
  return out;
}

}  // namespace

FreeElement free_bracket(const FreeElement& u, const FreeElement& v) {
  return bracket_impl(u, v, 0);
}

FreeElement free_bracket_truncated(const FreeElement& u, const FreeElement& v,
                                   std::size_t cap) {
  return bracket_impl(u, v, cap);
}

std::vector<Monomial> graded_basis(std::size_t generators, std::size_t degree) {
  if (degree == 0) throw usage_error("graded_basis needs degree >= 1");
  std::vector<Monomial> out;
  if (generators == 0) return out;
  Monomial m;
  m.word.assign(degree, 0);
  for (;;) {
    out.push_back(m);
    std::size_t pos = degree;
    while (pos > 0) {
      --pos;
      if (++m.word[pos] < generators) break;
      m.word[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

FreeElement truncate(const FreeElement& e, std::size_t n) {
  if (n == 0) throw usage_error("truncation degree must be >= 1");
  FreeElement out(e.field());
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() <= n) out.add_term(m, c);
  }
  return out;
}

Vec evaluate(const FreeElement& e, const StructureAlgebra& target,
             const std::vector<Vec>& assignment) {
  if (!(e.field() == target.field())) {
    throw usage_error("element and target algebra fields differ");
  }
  Vec out = target.zero_element();
  for (const auto& [m, c] : e.terms()) {
    if (m.word[0] >= assignment.size()) {
      throw usage_error("no assignment for generator x" +
                        std::to_string(m.word[0] + 1));
    }
    Vec acc = assignment[m.word[0]];
    for (std::size_t pos = 1; pos < m.word.size(); ++pos) {
      if (m.word[pos] >= assignment.size()) {
        throw usage_error("no assignment for generator x" +
                          std::to_string(m.word[pos] + 1));
      }
      acc = target.bracket(acc, assignment[m.word[pos]]);
    }
    out = vec_add(out, vec_scale(c, acc));
  }
  return out;
}

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    if (i) s += ' ';
    if (m.word[i] < names.size()) {
      s += names[m.word[i]];
    } else {
      s += 'x';
      s += std::to_string(m.word[i] + 1);
    }
  }
  s += ')';
  return s;
}

std::string FreeElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative =
        field_.is_rationals() && c.rational() < 0;
    const Scalar abs_c = negative ? -c : c;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (!abs_c.is_one()) {
      s += abs_c.to_string();
      s += '*';
    }
    s += monomial_to_string(m, names);
  }
  return s;
}

}  // namespace leibcas
