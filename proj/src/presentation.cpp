#include "leibcas/presentation.hpp"

#include <algorithm>

#include "leibcas/errors.hpp"

namespace leibcas {

std::size_t Presentation::max_relator_degree() const {
  std::size_t d = 0;
  for (const FreeElement& r : relators) d = std::max(d, r.degree());
  return d;
}

Presentation present(const StructureAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Presentation p;
  p.field = f;
  p.generators = n;
  for (std::size_t i = 0; i < n; ++i) p.names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FreeElement r(f);
      Monomial pair;
      pair.word = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      r.add_term(pair, Scalar::one(f));
      const Vec& c = a.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        r.add_term(Monomial{{static_cast<std::uint32_t>(k)}}, -c[k]);
      }
      if (!r.is_zero()) p.relators.push_back(std::move(r));
    }
  }
  return p;
}

namespace {

FreeElement element_as_free(const Field& f, const Vec& coords) {
  FreeElement e(f);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) {
      e.add_term(Monomial{{static_cast<std::uint32_t>(i)}}, coords[i]);
    }
  }
  return e;
}

}  // namespace

HnnExtension hnn_extend(const StructureAlgebra& base, const Subspace& a,
                        const MapOnSubspace& d, HnnKind kind) {
  const Field& f = base.field();
  const std::size_t n = base.dim();
  if (a.ambient() != n) throw usage_error("subalgebra ambient mismatch");
  if (!(d.domain == a)) throw usage_error("map domain differs from the subalgebra");
  if (!base.is_subalgebra(a)) {
    throw usage_error("extension base subspace is not a subalgebra");
  }
  const MapKind law = kind == HnnKind::derivation ? MapKind::derivation
                                                  : MapKind::anti_derivation;
  if (!satisfies_law_on_domain(base, d, law)) {
    throw usage_error(kind == HnnKind::derivation
                          ? "map is not a derivation on the subalgebra"
                          : "map is not an anti-derivation on the subalgebra");
  }

  HnnExtension h{base, a, d, kind, n, present(base)};
  h.presentation.generators = n + 1;
  h.presentation.names.push_back("t");
  const std::uint32_t t = static_cast<std::uint32_t>(n);
  for (std::size_t s = 0; s < a.dim(); ++s) {
    FreeElement lhs(f);
    const Vec& bs = a.basis()[s];
    for (std::size_t i = 0; i < n; ++i) {
      if (bs[i].is_zero()) continue;
      Monomial m;
      if (kind == HnnKind::derivation) {
        m.word = {static_cast<std::uint32_t>(i), t};  // [a_s, t]
      } else {
        m.word = {t, static_cast<std::uint32_t>(i)};  // [t, a_s]
      }
      lhs.add_term(m, bs[i]);
    }
    FreeElement relator = lhs - element_as_free(f, d.images.column(s));
    if (!relator.is_zero()) h.presentation.relators.push_back(std::move(relator));
  }
  return h;
}

TruncatedQuotient TruncatedQuotient::build(const Presentation& p,
                                           std::size_t degree_bound) {
  if (degree_bound < 1) throw usage_error("degree bound must be >= 1");
  if (degree_bound < p.max_relator_degree()) {
    throw usage_error("degree bound " + std::to_string(degree_bound) +
                      " is below the largest relator degree " +
                      std::to_string(p.max_relator_degree()));
  }
  TruncatedQuotient q(p.field, p.generators, degree_bound);
  std::vector<FreeElement> worklist;
  for (const FreeElement& r : p.relators) q.insert(r, worklist);
  while (!worklist.empty()) {
    FreeElement row = std::move(worklist.back());
    worklist.pop_back();
    for (FreeElement& b : q.bracket_closure_of(row)) q.insert(std::move(b), worklist);
  }
  return q;
}

bool TruncatedQuotient::insert(FreeElement e, std::vector<FreeElement>& worklist) {
  FreeElement r = reduce(std::move(e));
  if (r.is_zero()) return false;
  r = r.scaled(r.leading_coefficient().inverse());
  worklist.push_back(r);
  rows_.emplace(r.leading_monomial(), std::move(r));
  return true;
}

std::vector<FreeElement> TruncatedQuotient::bracket_closure_of(
    const FreeElement& row) const {
  std::vector<FreeElement> out;
  const std::size_t top = row.degree();
  if (top >= degree_bound_) return out;
  for (std::size_t e = 1; e + top <= degree_bound_; ++e) {
    for (const Monomial& m : graded_basis(generators_, e)) {
      FreeElement mono = FreeElement::monomial(field_, m, Scalar::one(field_));
      out.push_back(free_bracket(row, mono));
      out.push_back(free_bracket(mono, row));
    }
  }
  return out;
}

FreeElement TruncatedQuotient::reduce(const FreeElement& e) const {
  if (e.degree() > degree_bound_) {
    throw usage_error("element degree exceeds the truncation bound");
  }
  FreeElement r = e;
  for (;;) {
    // Largest term whose monomial is a pivot.
    const Monomial* hit = nullptr;
    Scalar coeff = Scalar::zero(field_);
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      if (rows_.count(it->first)) {
        hit = &it->first;
        coeff = it->second;
        break;
      }
    }
    if (!hit) return r;
    r = r - rows_.at(*hit).scaled(coeff);
  }
}

std::vector<std::size_t> TruncatedQuotient::quotient_dims_per_degree() const {
  // Rows in echelon form are contained in the filtration level of their
  // leading monomial, so counting leading degrees measures the ideal slice.
  std::vector<std::size_t> ideal_by_degree(degree_bound_ + 1, 0);
  for (const auto& [lead, row] : rows_) ideal_by_degree[lead.degree()]++;
  std::vector<std::size_t> out;
  std::size_t pow = 1;
  for (std::size_t d = 1; d <= degree_bound_; ++d) {
    pow *= generators_;
    out.push_back(pow - ideal_by_degree[d]);
  }
  return out;
}

std::size_t TruncatedQuotient::saturation_deficit() const {
  std::size_t missing = 0;
  for (const auto& [lead, row] : rows_) {
    for (const FreeElement& b : bracket_closure_of(row)) {
      if (!contains(b)) ++missing;
    }
  }
  return missing;
}

namespace {

const char* kEmbeddingSemantics =
    "the truncated relator span underapproximates the relator ideal, so a "
    "collapse witness disproves embeddability while no-collapse only means "
    "the falsification test passed up to this degree";

}  // namespace

EmbeddingVerdict embedding_check(const Presentation& p, std::size_t base_generators,
                                 std::size_t degree_bound) {
  TruncatedQuotient q = TruncatedQuotient::build(p, degree_bound);
  EmbeddingVerdict v;
  v.degree = degree_bound;
  v.quotient_dims = q.quotient_dims_per_degree();
  v.semantics = kEmbeddingSemantics;

  // Degree-1 slice of the relator span, as coordinates over all generators.
  const Field& f = p.field;
  std::vector<Vec> degree_one;
  for (const auto& [lead, row] : q.rows()) {
    if (lead.degree() != 1) continue;
    Vec coords = vec_zero(f, p.generators);
    for (const auto& [m, c] : row.terms()) coords[m.word[0]] = c;
    degree_one.push_back(std::move(coords));
  }
  Subspace dead = Subspace::span(f, p.generators, degree_one);
  // Collapse iff some nonzero combination of the first base_generators
  // coordinates died.
  std::vector<Vec> base_gens;
  for (std::size_t i = 0; i < base_generators; ++i) {
    base_gens.push_back(vec_unit(f, p.generators, i));
  }
  Subspace base_span = Subspace::span(f, p.generators, base_gens);
  Subspace bad = dead.intersect(base_span);
  if (bad.dim() > 0) {
    v.collapse = true;
    v.status = "collapse";
    FreeElement witness(f);
    const Vec& w = bad.basis()[0];
    for (std::size_t i = 0; i < p.generators; ++i) {
      if (!w[i].is_zero()) {
        witness.add_term(Monomial{{static_cast<std::uint32_t>(i)}}, w[i]);
      }
    }
    v.witness = std::move(witness);
  } else {
    v.status = "no-collapse-up-to-" + std::to_string(degree_bound);
  }
  return v;
}

EmbeddingVerdict embedding_check(const HnnExtension& h, std::size_t degree_bound) {
  return embedding_check(h.presentation, h.base.dim(), degree_bound);
}

ExactModelResult exact_model_check(const HnnExtension& h) {
  ExactModelResult result;
  if (h.subalgebra.dim() == 0) {
    result.status = ExactModelStatus::absent_free_product;
    return result;
  }
  if (h.kind != HnnKind::derivation || h.subalgebra.dim() != h.base.dim()) {
    result.status = ExactModelStatus::not_covered;
    return result;
  }
  // The map's domain basis is the canonical basis of the full space, i.e. the
  // standard one, so its image matrix acts directly on coordinates.
  const std::size_t n = h.base.dim();
  Matrix zero(h.base.field(), n, n);
  ExtensionResult ext = one_dim_extension(h.base, h.map.images, zero);
  if (!ext.algebra) {
    result.status = ExactModelStatus::rejected;
    result.failure = std::move(ext.report);
    return result;
  }
  Matrix embedding(h.base.field(), n + 1, n);
  for (std::size_t i = 0; i < n; ++i) embedding.at(i, i) = Scalar::one(h.base.field());
  result.status = ExactModelStatus::model;
  result.model = std::move(ext.algebra);
  result.embedding = std::move(embedding);
  return result;
}

}  // namespace leibcas
