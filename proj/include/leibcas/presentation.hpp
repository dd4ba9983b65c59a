#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibcas/derivations.hpp"
#include "leibcas/free_leibniz.hpp"

namespace leibcas {

/// Presentation in the class of right Leibniz algebras: indexed generators
/// plus relators in the free algebra on them.
struct Presentation {
  Field field;
  std::size_t generators = 0;
  std::vector<FreeElement> relators;
  std::vector<std::string> names;  // printing only; x1..xk when empty

  std::size_t max_relator_degree() const;
};

/// Structure-constant presentation: generators x1..xn, relators
/// [x_i, x_j] - sum_k c_ij^k x_k for all pairs.
Presentation present(const StructureAlgebra& a);

enum class HnnKind { derivation, anti_derivation };

/// Presentation of the extension of `base` by a stable letter t realizing a
/// derivation (relators [a_s, t] - d(a_s)) or an anti-derivation (relators
/// [t, a_s] - d(a_s)) of the subalgebra A, one relator per basis vector.
struct HnnExtension {
  StructureAlgebra base;
  Subspace subalgebra;
  MapOnSubspace map;
  HnnKind kind;
  std::size_t t_index = 0;  // == base.dim()
  Presentation presentation;
};

/// Checks that A is a subalgebra and that the map satisfies the defining law
/// of `kind` on it; usage_error with a witness description otherwise.
HnnExtension hnn_extend(const StructureAlgebra& base, const Subspace& a,
                        const MapOnSubspace& d, HnnKind kind);

/// Degree-truncated image of the relator ideal: the smallest subspace of the
/// degree <= N slice of the free algebra that contains the relators and is
/// closed under bracketing with monomials on both sides within the degree
/// bound. An underapproximation of the true ideal's slice, kept as a sparse
/// echelon basis (leading monomial = largest in degree-then-lex order).
class TruncatedQuotient {
 public:
  static TruncatedQuotient build(const Presentation& p, std::size_t degree_bound);

  std::size_t degree_bound() const { return degree_bound_; }
  std::size_t generators() const { return generators_; }
  const Field& field() const { return field_; }

  /// Normal form of e modulo the truncated relator span (e must have degree
  /// <= the bound).
  FreeElement reduce(const FreeElement& e) const;
  bool contains(const FreeElement& e) const { return reduce(e).is_zero(); }

  std::size_t ideal_dim() const { return rows_.size(); }
  /// Quotient dimension contributed by each degree 1..N.
  std::vector<std::size_t> quotient_dims_per_degree() const;

  /// Echelon rows keyed by leading monomial (descending).
  const std::map<Monomial, FreeElement, std::greater<Monomial>>& rows() const {
    return rows_;
  }

  /// Re-runs the saturation sweep; the number of new rows it would add
  /// (always 0 once built — exposed so the fixed point is testable).
  std::size_t saturation_deficit() const;

 private:
  TruncatedQuotient(const Field& f, std::size_t gens, std::size_t n)
      : field_(f), generators_(gens), degree_bound_(n) {}

  bool insert(FreeElement e, std::vector<FreeElement>& worklist);
  std::vector<FreeElement> bracket_closure_of(const FreeElement& row) const;

  Field field_;
  std::size_t generators_;
  std::size_t degree_bound_;
  std::map<Monomial, FreeElement, std::greater<Monomial>> rows_;
};

struct EmbeddingVerdict {
  bool collapse = false;
  std::size_t degree = 0;
  /// Nonzero combination of the base generators lying in the truncated
  /// relator span, when one exists.
  std::optional<FreeElement> witness;
  std::vector<std::size_t> quotient_dims;
  std::string status;     // "no-collapse-up-to-N" or "collapse"
  std::string semantics;  // what the verdict does and does not establish
};

/// Tests whether the base algebra's generators stay linearly independent
/// modulo the truncated relator span of the extension's presentation. A
/// collapse witness disproves embeddability (or reveals a bug); no collapse
/// up to N is a passed falsification test, not a proof.
EmbeddingVerdict embedding_check(const HnnExtension& h, std::size_t degree_bound);

/// Same check for an arbitrary presentation, treating the first
/// `base_generators` generators as the embedded ones.
EmbeddingVerdict embedding_check(const Presentation& p, std::size_t base_generators,
                                 std::size_t degree_bound);

enum class ExactModelStatus {
  model,              // finite-dimensional model built and verified
  rejected,           // construct-then-verify failed; see report
  absent_free_product,  // A = 0: no finite model exists
  not_covered,        // no finite construction is attempted for this shape
};

struct ExactModelResult {
  ExactModelStatus status = ExactModelStatus::not_covered;
  std::optional<StructureAlgebra> model;
  std::optional<Matrix> embedding;  // (n+1) x n inclusion of the base
  std::optional<LeibnizReport> failure;
};

/// Exact finite witnesses where one exists: for a derivation defined on the
/// whole algebra this is the one-dimensional extension with [x,t] = d(x),
/// [t,x] = 0, accepted only if it verifies.
ExactModelResult exact_model_check(const HnnExtension& h);

}  // namespace leibcas
