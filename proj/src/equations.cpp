#include "leibcas/equations.hpp"

#include <algorithm>
#include <set>

#include "leibcas/errors.hpp"

namespace leibcas {

TermExpr TermExpr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->name = std::move(name);
  return TermExpr(std::move(n));
}

TermExpr TermExpr::constant(Vec coords) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->coords = std::move(coords);
  return TermExpr(std::move(n));
}

TermExpr TermExpr::bracket(TermExpr lhs, TermExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::bracket;
  n->children = {std::move(lhs), std::move(rhs)};
  return TermExpr(std::move(n));
}

TermExpr TermExpr::sum(std::vector<TermExpr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->children = std::move(terms);
  return TermExpr(std::move(n));
}

TermExpr TermExpr::scalar_multiple(Scalar c, TermExpr t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::scalar_multiple;
  n->factor = std::move(c);
  n->children = {std::move(t)};
  return TermExpr(std::move(n));
}

namespace {

void collect_vars(const TermExpr& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermExpr::Kind::variable:
      out.insert(t.var_name());
      break;
    case TermExpr::Kind::constant:
      break;
    default:
      for (const TermExpr& c : t.children()) collect_vars(c, out);
  }
}

}  // namespace

std::vector<std::string> TermExpr::variables() const {
  std::set<std::string> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

Vec eval_term(const TermExpr& t, const Assignment& asg,
              const StructureAlgebra& target, const Matrix& inclusion) {
  switch (t.kind()) {
    case TermExpr::Kind::variable: {
      auto it = asg.find(t.var_name());
      if (it == asg.end()) throw usage_error("unassigned variable " + t.var_name());
      if (it->second.size() != target.dim()) {
        throw usage_error("assignment for " + t.var_name() +
                          " has the wrong dimension");
      }
      return it->second;
    }
    case TermExpr::Kind::constant:
      return inclusion.apply(t.const_coords());
    case TermExpr::Kind::bracket:
      return target.bracket(eval_term(t.children()[0], asg, target, inclusion),
                            eval_term(t.children()[1], asg, target, inclusion));
    case TermExpr::Kind::sum: {
      Vec acc = target.zero_element();
      for (const TermExpr& c : t.children()) {
        acc = vec_add(acc, eval_term(c, asg, target, inclusion));
      }
      return acc;
    }
    case TermExpr::Kind::scalar_multiple:
      return vec_scale(t.factor(),
                       eval_term(t.children()[0], asg, target, inclusion));
  }
  throw invariant_violation("unreachable term kind");
}

void require_embedding(const StructureAlgebra& source,
                       const StructureAlgebra& target, const Matrix& inclusion) {
  if (inclusion.rows() != target.dim() || inclusion.cols() != source.dim()) {
    throw usage_error("inclusion matrix has the wrong shape");
  }
  if (rank(inclusion) != source.dim()) {
    throw usage_error("inclusion is not injective");
  }
  for (std::size_t i = 0; i < source.dim(); ++i) {
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vec lhs = inclusion.apply(source.basis_bracket(i, j));
      Vec rhs = target.bracket(inclusion.column(i), inclusion.column(j));
      if (lhs != rhs) {
        throw usage_error("inclusion is not an algebra homomorphism (fails at "
                          "basis pair " +
                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

CheckReport check_solution(const EqSystem& s, const Assignment& asg,
                           const StructureAlgebra& target, const Matrix& inclusion) {
  CheckReport report;
  report.ok = true;
  for (const TermExpr& eq : s.equations) {
    Vec v = eval_term(eq, asg, target, inclusion);
    bool ok = vec_is_zero(v);
    report.ok = report.ok && ok;
    report.constraints.push_back({true, ok, std::move(v)});
  }
  for (const TermExpr& neq : s.inequations) {
    Vec v = eval_term(neq, asg, target, inclusion);
    bool ok = !vec_is_zero(v);
    report.ok = report.ok && ok;
    report.constraints.push_back({false, ok, std::move(v)});
  }
  return report;
}

namespace {

bool satisfied(const EqSystem& s, const Assignment& asg,
               const StructureAlgebra& l, const Matrix& identity) {
  for (const TermExpr& eq : s.equations) {
    if (!vec_is_zero(eval_term(eq, asg, l, identity))) return false;
  }
  for (const TermExpr& neq : s.inequations) {
    if (vec_is_zero(eval_term(neq, asg, l, identity))) return false;
  }
  return true;
}

/// Element of GF(p)^n with the given enumeration index (odometer order, last
/// coordinate fastest).
Vec element_at(const Field& f, std::size_t n, unsigned long long index) {
  const unsigned long p = f.prime();
  Vec v = vec_zero(f, n);
  for (std::size_t i = n; i > 0; --i) {
    v[i - 1] = Scalar::of(f, static_cast<long>(index % p));
    index /= p;
  }
  return v;
}

}  // namespace

SolveResult solve_in(const EqSystem& s, const StructureAlgebra& l,
                     unsigned long long budget) {
  const Field& f = l.field();
  if (f.is_rationals()) {
    throw usage_error("exhaustive solving needs a finite field");
  }
  SolveResult result;
  const std::size_t n = l.dim();
  const std::size_t v = s.vars.size();

  // Total assignment count p^(n*v), capped against the budget.
  unsigned long long total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < n * v; ++i) {
    if (total > budget) {
      overflow = true;
      break;
    }
    total *= f.prime();
  }
  if (overflow || total > budget) {
    result.status = SolveStatus::undecided_budget;
    result.total = overflow ? 0 : total;
    return result;
  }
  result.total = total;

  const Matrix identity = Matrix::identity(f, n);
  unsigned long long per_var = 1;
  for (std::size_t i = 0; i < n; ++i) per_var *= f.prime();

  auto assignment_at = [&](unsigned long long index) {
    Assignment asg;
    // Variables in declaration order; later variables vary fastest.
    for (std::size_t vi = v; vi > 0; --vi) {
      asg[s.vars[vi - 1]] = element_at(f, n, index % per_var);
      index /= per_var;
    }
    return asg;
  };

  for (unsigned long long idx = 0; idx < total; ++idx) {
    Assignment asg = assignment_at(idx);
    ++result.tried;
    if (satisfied(s, asg, l, identity)) {
      result.status = SolveStatus::found;
      result.assignment = std::move(asg);
      return result;
    }
  }

  // Complete decision: confirm absence with an independent reversed pass.
  for (unsigned long long idx = total; idx > 0; --idx) {
    Assignment asg = assignment_at(idx - 1);
    if (satisfied(s, asg, l, identity)) {
      throw invariant_violation("reversed enumeration found a solution the "
                                "forward pass missed");
    }
  }
  result.status = SolveStatus::no_solution;
  return result;
}

Subspace centralizer(const StructureAlgebra& l, const std::vector<Vec>& s) {
  const Field& f = l.field();
  const std::size_t n = l.dim();
  Subspace span_s = Subspace::span(f, n, s);
  if (span_s.dim() == 0) return Subspace::full(f, n);
  Matrix sys(f, 2 * n * span_s.dim(), n);
  std::size_t row = 0;
  for (const Vec& basis_vec : span_s.basis()) {
    const Matrix r = l.right_mult(basis_vec);  // x -> [x, s]
    const Matrix lm = l.left_mult(basis_vec);  // x -> [s, x]
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        sys.at(row, j) = r.at(k, j);
        sys.at(row + 1, j) = lm.at(k, j);
      }
      row += 2;
    }
  }
  return null_space(sys);
}

NormalizerResult normalizer(const StructureAlgebra& l, const Subspace& a) {
  const Field& f = l.field();
  const std::size_t n = l.dim();
  if (a.ambient() != n) throw usage_error("ambient dimension mismatch");
  const Matrix q = a.quotient_map();
  NormalizerResult result{Subspace::full(f, n), Subspace::full(f, n),
                          Subspace::full(f, n)};
  if (a.dim() == 0 || q.rows() == 0) {
    // A = 0 ([x,0]=0 is always inside) or A = L; everything normalizes.
    result.both = result.left.intersect(result.right);
    return result;
  }
  const std::size_t qr = q.rows();
  Matrix left_sys(f, a.dim() * qr, n);
  Matrix right_sys(f, a.dim() * qr, n);
  std::size_t row = 0;
  for (const Vec& basis_vec : a.basis()) {
    const Matrix la = q * l.left_mult(basis_vec);    // x -> [a, x] mod A
    const Matrix ra = q * l.right_mult(basis_vec);   // x -> [x, a] mod A
    for (std::size_t k = 0; k < qr; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        left_sys.at(row, j) = la.at(k, j);
        right_sys.at(row, j) = ra.at(k, j);
      }
      ++row;
    }
  }
  result.left = null_space(left_sys);
  result.right = null_space(right_sys);
  result.both = result.left.intersect(result.right);
  return result;
}

DivisionWitness division_witness(const StructureAlgebra& l, const Vec& a,
                                 const Vec& b, DivisionSide side,
                                 std::size_t degree_bound, bool span_domain) {
  if (vec_is_zero(a)) throw usage_error("division by the zero element");
  if (a.size() != l.dim() || b.size() != l.dim()) {
    throw usage_error("division operands must match the algebra dimension");
  }
  DivisionWitness w;
  w.side = side;
  const MapKind kind = side == DivisionSide::right ? MapKind::derivation
                                                   : MapKind::anti_derivation;
  AssignmentResult asg = map_from_assignment(l, {{a, b}}, kind, span_domain);
  if (!asg.map) {
    w.status = WitnessStatus::assignment_inconsistent;
    w.contradiction = std::move(asg.contradiction);
    w.detail = asg.detail;
    return w;
  }
  const HnnKind hk = side == DivisionSide::right ? HnnKind::derivation
                                                 : HnnKind::anti_derivation;
  HnnExtension h = hnn_extend(l, asg.map->domain, *asg.map, hk);
  w.exact = exact_model_check(h);
  w.embedding = embedding_check(h, degree_bound);

  // Relator-level check: the equation with t substituted dies in the
  // truncated quotient. [a, t] - b for the right side, [t, a] - b for the
  // left.
  {
    const Field& f = l.field();
    TruncatedQuotient q = TruncatedQuotient::build(h.presentation, degree_bound);
    FreeElement eq(f);
    const std::uint32_t t = static_cast<std::uint32_t>(h.t_index);
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (a[i].is_zero()) continue;
      Monomial m;
      if (side == DivisionSide::right) {
        m.word = {static_cast<std::uint32_t>(i), t};
      } else {
        m.word = {t, static_cast<std::uint32_t>(i)};
      }
      eq.add_term(m, a[i]);
    }
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (!b[i].is_zero()) eq.add_term(Monomial{{static_cast<std::uint32_t>(i)}}, -b[i]);
    }
    w.relator_check = q.contains(eq);
  }

  if (w.embedding->collapse) {
    w.status = WitnessStatus::collapse;
    w.detail = "truncated quotient produced a collapse witness";
    w.extension = std::move(h);
    return w;
  }

  if (w.exact.status == ExactModelStatus::model) {
    // Check [a, t] = b inside the verified model via the equation machinery.
    const StructureAlgebra& model = *w.exact.model;
    const Matrix& inc = *w.exact.embedding;
    require_embedding(l, model, inc);
    EqSystem s;
    s.vars = {"y"};
    TermExpr lhs = side == DivisionSide::right
                       ? TermExpr::bracket(TermExpr::constant(a),
                                           TermExpr::variable("y"))
                       : TermExpr::bracket(TermExpr::variable("y"),
                                           TermExpr::constant(a));
    s.equations.push_back(TermExpr::sum(
        {lhs, TermExpr::scalar_multiple(-Scalar::one(l.field()),
                                        TermExpr::constant(b))}));
    Assignment asg_model;
    asg_model["y"] = vec_unit(l.field(), model.dim(), model.dim() - 1);
    CheckReport check = check_solution(s, asg_model, model, inc);
    if (check.ok && w.relator_check) {
      w.status = WitnessStatus::verified_exact;
      w.detail = "witness t verified in the finite model and at relator level";
      w.extension = std::move(h);
      return w;
    }
  }

  w.status = w.relator_check ? WitnessStatus::verified_truncated
                             : WitnessStatus::collapse;
  w.detail = w.relator_check
                 ? "no-collapse certificate and relator-level check passed"
                 : "relator-level check failed";
  w.extension = std::move(h);
  return w;
}

NzBiderReport nz_to_bider(const StructureAlgebra& l, const Subspace& a) {
  if (!l.is_subalgebra(a)) throw usage_error("nz_to_bider needs a subalgebra");
  const Field& f = l.field();
  NzBiderReport report;
  NormalizerResult nz = normalizer(l, a);
  report.normalizer_both = nz.both;
  Subspace c = centralizer(l, a.basis());
  report.centralizer_in_normalizer = c.intersect(nz.both);

  const StructureAlgebra a_alg = l.subalgebra_structure(a);
  const std::size_t k = a.dim();
  report.bider_space_dim = biderivation_space(a_alg).dim();

  report.all_pairs_valid = true;
  std::vector<Vec> pair_vectors;
  for (const Vec& z : nz.both.basis()) {
    // z normalizes both sides, so both multiplications restrict to A.
    Restriction rd = restrict_map(l, a, -l.right_mult(z));
    Restriction rdd = restrict_map(l, a, l.left_mult(z));
    if (!rd.on_subspace || !rdd.on_subspace) {
      throw invariant_violation("normalizer element failed to restrict");
    }
    NzBiderPair pair{z, *rd.on_subspace, *rdd.on_subspace, false, false};
    pair.passes_pair_laws = !pair_check(a_alg, pair.d, pair.dd).has_value();
    pair.raw_orientation_passes = !pair_check(a_alg, -pair.d, pair.dd).has_value();
    report.all_pairs_valid = report.all_pairs_valid && pair.passes_pair_laws;
    Vec pv = vectorize_map(pair.d);
    Vec pw = vectorize_map(pair.dd);
    pv.insert(pv.end(), pw.begin(), pw.end());
    pair_vectors.push_back(std::move(pv));
    report.pairs.push_back(std::move(pair));
  }

  // The map z -> pair on the normalizer: columns indexed by normalizer basis.
  Matrix phi = Matrix::from_columns(f, pair_vectors, 2 * k * k);
  report.image_dim = pair_vectors.empty() ? 0 : rank(phi);

  // Linearity: the pair of a combination equals the combination of pairs.
  report.map_is_linear = true;
  if (!nz.both.basis().empty()) {
    Vec combo = nz.both.basis()[0];
    for (std::size_t i = 1; i < nz.both.basis().size(); ++i) {
      combo = vec_add(combo, nz.both.basis()[i]);
    }
    Restriction rd = restrict_map(l, a, -l.right_mult(combo));
    Restriction rdd = restrict_map(l, a, l.left_mult(combo));
    Vec expect = vec_zero(f, 2 * k * k);
    for (const Vec& pv : pair_vectors) expect = vec_add(expect, pv);
    Vec got = vectorize_map(*rd.on_subspace);
    Vec got2 = vectorize_map(*rdd.on_subspace);
    got.insert(got.end(), got2.begin(), got2.end());
    report.map_is_linear = got == expect;
  }

  // Kernel of phi, lifted back to elements of the normalizer.
  std::vector<Vec> kernel_gens;
  if (!pair_vectors.empty()) {
    for (const Vec& coeffs : kernel_basis(phi)) {
      Vec z = vec_zero(f, l.dim());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        z = vec_add(z, vec_scale(coeffs[i], nz.both.basis()[i]));
      }
      kernel_gens.push_back(std::move(z));
    }
  }
  report.kernel = Subspace::span(f, l.dim(), kernel_gens);
  report.kernel_contains_centralizer =
      report.kernel.contains(report.centralizer_in_normalizer);
  return report;
}

EqSystem system_from_constants(const StructureAlgebra& h) {
  const Field& f = h.field();
  const std::size_t n = h.dim();
  EqSystem s;
  for (std::size_t i = 0; i < n; ++i) s.vars.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<TermExpr> parts;
      parts.push_back(TermExpr::bracket(TermExpr::variable(s.vars[i]),
                                        TermExpr::variable(s.vars[j])));
      const Vec& c = h.basis_bracket(i, j);
      for (std::size_t r = 0; r < n; ++r) {
        if (c[r].is_zero()) continue;
        parts.push_back(TermExpr::scalar_multiple(-c[r], TermExpr::variable(s.vars[r])));
      }
      s.equations.push_back(TermExpr::sum(std::move(parts)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.inequations.push_back(TermExpr::variable(s.vars[i]));
  }
  return s;
}

}  // namespace leibcas
