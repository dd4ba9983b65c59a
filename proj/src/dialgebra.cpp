#include "leibcas/dialgebra.hpp"

#include "leibcas/errors.hpp"
#include "leibcas/rng.hpp"

namespace leibcas {

DialgElement DialgElement::generator(const Field& f, std::uint32_t i) {
  return monomial(f, DialgMonomial{{i}, 0}, Scalar::one(f));
}

DialgElement DialgElement::monomial(const Field& f, DialgMonomial m, Scalar c) {
  if (m.word.empty()) throw usage_error("dialgebra monomials must be nonempty");
  if (m.center >= m.word.size()) throw usage_error("center index out of range");
  DialgElement e(f);
  e.add_term(m, c);
  return e;
}

std::size_t DialgElement::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void DialgElement::add_term(const DialgMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DialgElement DialgElement::operator+(const DialgElement& o) const {
  DialgElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

DialgElement DialgElement::operator-(const DialgElement& o) const {
  DialgElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

DialgElement DialgElement::operator-() const {
  DialgElement r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DialgElement DialgElement::scaled(const Scalar& c) const {
  DialgElement r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

namespace {

DialgMonomial concat(const DialgMonomial& u, const DialgMonomial& v,
                     std::size_t center) {
  DialgMonomial m;
  m.word = u.word;
  m.word.insert(m.word.end(), v.word.begin(), v.word.end());
  m.center = center;
  return m;
}

DialgElement product(const DialgElement& u, const DialgElement& v, bool keep_left) {
  if (!(u.field() == v.field())) throw usage_error("mixed fields in product");
  DialgElement out(u.field());
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      const std::size_t center =
          keep_left ? mu.center : mu.word.size() + mv.center;
      out.add_term(concat(mu, mv, center), cu * cv);
    }
  }
  return out;
}

}  // namespace

DialgElement dprod_left(const DialgElement& u, const DialgElement& v) {
  return product(u, v, /*keep_left=*/true);
}

DialgElement dprod_right(const DialgElement& u, const DialgElement& v) {
  return product(u, v, /*keep_left=*/false);
}

DialgElement dialg_bracket(const DialgElement& u, const DialgElement& v) {
  return dprod_left(u, v) - dprod_right(v, u);
}

namespace {

struct AxiomCase {
  const char* name;
  // lhs/rhs as functions of (x, y, z) through the two injectable products.
  DialgElement (*lhs)(const DialgProduct&, const DialgProduct&,
                      const DialgElement&, const DialgElement&, const DialgElement&);
  DialgElement (*rhs)(const DialgProduct&, const DialgProduct&,
                      const DialgElement&, const DialgElement&, const DialgElement&);
};

const AxiomCase kAxioms[] = {
    {"x -| (y -| z) = (x -| y) -| z",
     [](const DialgProduct& l, const DialgProduct&, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return l(x, l(y, z)); },
     [](const DialgProduct& l, const DialgProduct&, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return l(l(x, y), z); }},
    {"x |- (y |- z) = (x |- y) |- z",
     [](const DialgProduct&, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return r(x, r(y, z)); },
     [](const DialgProduct&, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return r(r(x, y), z); }},
    {"x -| (y |- z) = (x -| y) -| z",
     [](const DialgProduct& l, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return l(x, r(y, z)); },
     [](const DialgProduct& l, const DialgProduct&, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return l(l(x, y), z); }},
    {"(x |- y) -| z = x |- (y -| z)",
     [](const DialgProduct& l, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return l(r(x, y), z); },
     [](const DialgProduct& l, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return r(x, l(y, z)); }},
    {"(x -| y) |- z = x |- (y |- z)",
     [](const DialgProduct& l, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return r(l(x, y), z); },
     [](const DialgProduct&, const DialgProduct& r, const DialgElement& x,
        const DialgElement& y, const DialgElement& z) { return r(x, r(y, z)); }},
};

std::vector<DialgMonomial> all_monomials(std::size_t generators, std::size_t length) {
  std::vector<DialgMonomial> out;
  for (const Monomial& w : graded_basis(generators, length)) {
    for (std::size_t c = 0; c < length; ++c) {
      out.push_back(DialgMonomial{w.word, c});
    }
  }
  return out;
}

DialgMonomial random_monomial(Rng& rng, std::size_t generators, std::size_t length) {
  DialgMonomial m;
  for (std::size_t i = 0; i < length; ++i) {
    m.word.push_back(static_cast<std::uint32_t>(rng.below(generators)));
  }
  m.center = rng.below(length);
  return m;
}

}  // namespace

AxiomsReport axioms_check(const Field& f, std::size_t generators,
                          std::size_t exhaustive_total, std::size_t samples,
                          std::uint64_t seed, const DialgProduct& left,
                          const DialgProduct& right) {
  AxiomsReport report;
  auto run_triple = [&](const DialgMonomial& x, const DialgMonomial& y,
                        const DialgMonomial& z) {
    DialgElement ex = DialgElement::monomial(f, x, Scalar::one(f));
    DialgElement ey = DialgElement::monomial(f, y, Scalar::one(f));
    DialgElement ez = DialgElement::monomial(f, z, Scalar::one(f));
    for (const AxiomCase& ax : kAxioms) {
      DialgElement lhs = ax.lhs(left, right, ex, ey, ez);
      DialgElement rhs = ax.rhs(left, right, ex, ey, ez);
      if (!(lhs == rhs)) {
        report.ok = false;
        report.witness = AxiomWitness{ax.name, x, y, z, lhs, rhs};
        return false;
      }
    }
    ++report.triples_checked;
    return true;
  };

  for (std::size_t a = 1; a + 2 <= exhaustive_total; ++a) {
    for (std::size_t b = 1; a + b + 1 <= exhaustive_total; ++b) {
      for (std::size_t c = 1; a + b + c <= exhaustive_total; ++c) {
        for (const DialgMonomial& x : all_monomials(generators, a)) {
          for (const DialgMonomial& y : all_monomials(generators, b)) {
            for (const DialgMonomial& z : all_monomials(generators, c)) {
              if (!run_triple(x, y, z)) return report;
            }
          }
        }
      }
    }
  }

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    DialgMonomial x = random_monomial(rng, generators, 1 + rng.below(4));
    DialgMonomial y = random_monomial(rng, generators, 1 + rng.below(4));
    DialgMonomial z = random_monomial(rng, generators, 1 + rng.below(4));
    if (!run_triple(x, y, z)) return report;
  }
  return report;
}

DialgElement leibniz_to_dialg(const FreeElement& e) {
  const Field& f = e.field();
  DialgElement out(f);
  for (const auto& [m, c] : e.terms()) {
    DialgElement acc = DialgElement::generator(f, m.word[0]);
    for (std::size_t pos = 1; pos < m.word.size(); ++pos) {
      acc = dialg_bracket(acc, DialgElement::generator(f, m.word[pos]));
    }
    out = out + acc.scaled(c);
  }
  return out;
}

std::vector<DialgElement> transfer_presentation(const std::vector<FreeElement>& s) {
  std::vector<DialgElement> out;
  out.reserve(s.size());
  for (const FreeElement& r : s) out.push_back(leibniz_to_dialg(r));
  return out;
}

std::string dialg_monomial_to_string(const DialgMonomial& m,
                                     const std::vector<std::string>& names) {
  auto name = [&](std::uint32_t g) {
    return g < names.size() ? names[g] : "x" + std::to_string(g + 1);
  };
  std::string s;
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    if (i) s += i <= m.center ? " |- " : " -| ";
    s += name(m.word[i]);
  }
  return s;
}

std::string DialgElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = field_.is_rationals() && c.rational() < 0;
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
    const bool wrap = m.word.size() > 1;
    if (wrap) s += '(';
    s += dialg_monomial_to_string(m, names);
    if (wrap) s += ')';
  }
  return s;
}

}  // namespace leibcas
