#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibcas/presentation.hpp"

namespace leibcas {

/// Expression tree over variables, constants from a fixed algebra, brackets,
/// scalar multiples and sums. Kept unreduced; only evaluation is needed.
class TermExpr {
 public:
  enum class Kind { variable, constant, bracket, sum, scalar_multiple };

  static TermExpr variable(std::string name);
  static TermExpr constant(Vec coords);
  static TermExpr bracket(TermExpr lhs, TermExpr rhs);
  static TermExpr sum(std::vector<TermExpr> terms);
  static TermExpr scalar_multiple(Scalar c, TermExpr t);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const Vec& const_coords() const { return node_->coords; }
  const Scalar& factor() const { return node_->factor; }
  const std::vector<TermExpr>& children() const { return node_->children; }

  /// Variable names appearing in the tree, sorted.
  std::vector<std::string> variables() const;

 private:
  struct Node {
    Kind kind;
    std::string name;               // variable
    Vec coords;                     // constant
    Scalar factor;                  // scalar_multiple
    std::vector<TermExpr> children; // bracket (2), sum (any), scalar_multiple (1)
  };
  explicit TermExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Equations read as term = 0, inequations as term != 0.
struct EqSystem {
  std::vector<std::string> vars;
  std::vector<TermExpr> equations;
  std::vector<TermExpr> inequations;
};

using Assignment = std::map<std::string, Vec>;

/// Structural evaluation; constants pass through `inclusion` (a verified
/// homomorphism matrix from the constants' algebra into the target).
Vec eval_term(const TermExpr& t, const Assignment& asg,
              const StructureAlgebra& target, const Matrix& inclusion);

/// Checks the inclusion matrix is an injective algebra homomorphism.
void require_embedding(const StructureAlgebra& source,
                       const StructureAlgebra& target, const Matrix& inclusion);

struct ConstraintReport {
  bool is_equation = true;
  bool ok = false;
  Vec value;
};

struct CheckReport {
  bool ok = false;
  std::vector<ConstraintReport> constraints;
};

CheckReport check_solution(const EqSystem& s, const Assignment& asg,
                           const StructureAlgebra& target, const Matrix& inclusion);

enum class SolveStatus { found, no_solution, undecided_budget };

struct SolveResult {
  SolveStatus status = SolveStatus::undecided_budget;
  std::optional<Assignment> assignment;
  unsigned long long tried = 0;
  unsigned long long total = 0;
};

/// Exhaustive search over GF(p)^dim assignments in deterministic
/// lexicographic order. Absence is a complete decision and is re-checked by a
/// second enumeration in reverse order before being reported.
SolveResult solve_in(const EqSystem& s, const StructureAlgebra& l,
                     unsigned long long budget);

/// {x : [x,s] = 0 and [s,x] = 0 for all s in span S}.
Subspace centralizer(const StructureAlgebra& l, const std::vector<Vec>& s);

struct NormalizerResult {
  Subspace left;   // {x : [a,x] in A for all a in A}
  Subspace right;  // {y : [y,a] in A for all a in A}
  Subspace both;
};

NormalizerResult normalizer(const StructureAlgebra& l, const Subspace& a);

enum class DivisionSide { left, right };

enum class WitnessStatus {
  verified_exact,        // finite model verified and equation checked in it
  verified_truncated,    // no-collapse certificate plus relator-level check
  collapse,              // truncated quotient refuted independence
  assignment_inconsistent,
};

/// Result of solving [x,a] = b (left) or [a,y] = b (right) by adjoining a
/// stable letter: the witness is t itself in the extension.
struct DivisionWitness {
  DivisionSide side = DivisionSide::right;
  WitnessStatus status = WitnessStatus::assignment_inconsistent;
  std::optional<HnnExtension> extension;
  std::optional<EmbeddingVerdict> embedding;
  ExactModelResult exact;
  bool relator_check = false;  // [a,t]-b (resp. [t,a]-b) dies in the quotient
  std::optional<Vec> contradiction;
  std::string detail;
};

DivisionWitness division_witness(const StructureAlgebra& l, const Vec& a,
                                 const Vec& b, DivisionSide side,
                                 std::size_t degree_bound,
                                 bool span_domain = false);

struct NzBiderPair {
  Vec z;
  Matrix d;   // restriction of x -> -[x,z] to the subalgebra
  Matrix dd;  // restriction of x -> [z,x]
  bool passes_pair_laws = false;
  bool raw_orientation_passes = false;  // (x->[x,z], x->[z,x]) checked as-is
};

struct NzBiderReport {
  Subspace normalizer_both;
  Subspace centralizer_in_normalizer;
  Subspace kernel;
  std::vector<NzBiderPair> pairs;
  bool all_pairs_valid = false;
  bool map_is_linear = false;
  bool kernel_contains_centralizer = false;
  std::size_t image_dim = 0;
  std::size_t bider_space_dim = 0;
};

/// For each normalizer element z of a subalgebra A, forms the restricted pair
/// (x -> -[x,z], x -> [z,x]) — the inner-pair orientation, which the derived
/// identity [x,[y,z]+[z,y]] = 0 makes a valid pair on A — and reports the
/// induced linear map, its kernel, and dimensions against the pair space of
/// A. Containments and dimensions only; no isomorphism is claimed.
NzBiderReport nz_to_bider(const StructureAlgebra& l, const Subspace& a);

/// Variables x1..xn, equations [x_i,x_j] - sum_r c_ij^r x_r = 0, inequations
/// x_i != 0: a solution in any algebra is a nonzero homomorphic image of h.
EqSystem system_from_constants(const StructureAlgebra& h);

}  // namespace leibcas
