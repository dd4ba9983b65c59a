#include "leibcas/derivations.hpp"

#include "leibcas/errors.hpp"

namespace leibcas {

Vec vectorize_map(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = 0; s < m.cols(); ++s) v.push_back(m.at(r, s));
  return v;
}

Matrix map_from_vec(const Field& f, std::size_t n, const Vec& v) {
  if (v.size() != n * n) throw usage_error("vectorized map has wrong length");
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) m.at(r, s) = v[r * n + s];
  return m;
}

bool is_derivation(const StructureAlgebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = d.apply(a.basis_bracket(i, j));
      Vec rhs = vec_add(a.bracket(d.column(i), a.element(j)),
                        a.bracket(a.element(i), d.column(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_antiderivation(const StructureAlgebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = d.apply(a.basis_bracket(i, j));
      Vec rhs = vec_sub(a.bracket(d.column(i), a.element(j)),
                        a.bracket(d.column(j), a.element(i)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// One linear condition per (basis pair, output coordinate) in the n^2
// unknowns d_{rs}; rows are appended to `sys` starting at row `row0`.
// `sign_second` distinguishes the derivation law (+[x, d(y)]) from the
// anti-derivation law (-[d(y), x]).
void emit_law_rows(const StructureAlgebra& a, Matrix& sys, std::size_t row0,
                   std::size_t col0, bool anti) {
  const std::size_t n = a.dim();
  std::size_t row = row0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& cij = a.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // d([e_i,e_j])_k  -  [d(e_i),e_j]_k  -/+  second term = 0
        for (std::size_t m = 0; m < n; ++m) {
          if (!cij[m].is_zero()) sys.at(row, col0 + k * n + m) += cij[m];
          const Scalar& cmj_k = a.basis_bracket(m, j)[k];
          if (!cmj_k.is_zero()) sys.at(row, col0 + m * n + i) -= cmj_k;
          if (!anti) {
            const Scalar& cim_k = a.basis_bracket(i, m)[k];
            if (!cim_k.is_zero()) sys.at(row, col0 + m * n + j) -= cim_k;
          } else {
            const Scalar& cmi_k = a.basis_bracket(m, i)[k];
            if (!cmi_k.is_zero()) sys.at(row, col0 + m * n + j) += cmi_k;
          }
        }
        ++row;
      }
    }
  }
}

}  // namespace

Subspace derivation_space(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(a.field(), n * n * n, n * n);
  emit_law_rows(a, sys, 0, 0, /*anti=*/false);
  return null_space(sys);
}

Subspace antiderivation_space(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(a.field(), n * n * n, n * n);
  emit_law_rows(a, sys, 0, 0, /*anti=*/true);
  return null_space(sys);
}

Subspace biderivation_space(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  // d a derivation, D an anti-derivation, plus the compatibility rows
  // [e_i, (d - D)(e_j)] = 0.
  Matrix sys(a.field(), 3 * n * nn, 2 * nn);
  emit_law_rows(a, sys, 0, 0, /*anti=*/false);
  emit_law_rows(a, sys, n * nn, nn, /*anti=*/true);
  std::size_t row = 2 * n * nn;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& cim_k = a.basis_bracket(i, m)[k];
          if (cim_k.is_zero()) continue;
          sys.at(row, m * n + j) += cim_k;
          sys.at(row, nn + m * n + j) -= cim_k;
        }
        ++row;
      }
    }
  }
  return null_space(sys);
}

std::optional<PairViolation> pair_check(const StructureAlgebra& a,
                                        const Matrix& d, const Matrix& dd) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = d.apply(a.basis_bracket(i, j));
      Vec rhs = vec_add(a.bracket(d.column(i), a.element(j)),
                        a.bracket(a.element(i), d.column(j)));
      if (lhs != rhs) {
        return PairViolation{"d([x,y]) = [d(x),y] + [x,d(y)]", i, j, lhs, rhs};
      }
      lhs = dd.apply(a.basis_bracket(i, j));
      rhs = vec_sub(a.bracket(dd.column(i), a.element(j)),
                    a.bracket(dd.column(j), a.element(i)));
      if (lhs != rhs) {
        return PairViolation{"D([x,y]) = [D(x),y] - [D(y),x]", i, j, lhs, rhs};
      }
      lhs = a.bracket(a.element(i), d.column(j));
      rhs = a.bracket(a.element(i), dd.column(j));
      if (lhs != rhs) {
        return PairViolation{"[x,d(y)] = [x,D(y)]", i, j, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

Biderivation Biderivation::make(const StructureAlgebra& a, Matrix d, Matrix dd) {
  if (d.rows() != a.dim() || d.cols() != a.dim() || dd.rows() != a.dim() ||
      dd.cols() != a.dim()) {
    throw usage_error("biderivation maps must be n x n");
  }
  if (auto bad = pair_check(a, d, dd)) {
    throw usage_error("pair is not a biderivation; fails " + bad->equation +
                      " at basis pair (" + std::to_string(bad->i) + "," +
                      std::to_string(bad->j) + ")");
  }
  return Biderivation(std::move(d), std::move(dd));
}

Vec Biderivation::vectorized() const {
  Vec v = vectorize_map(d_);
  Vec w = vectorize_map(dd_);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

Biderivation bider_bracket(const StructureAlgebra& a, const Biderivation& p1,
                           const Biderivation& p2) {
  Matrix d = p1.d() * p2.d() - p2.d() * p1.d();
  Matrix dd = p1.dd() * p2.d() - p2.d() * p1.dd();
  if (auto bad = pair_check(a, d, dd)) {
    throw invariant_violation("bider bracket left the biderivation space: " +
                              bad->equation);
  }
  return Biderivation::make(a, std::move(d), std::move(dd));
}

Biderivation inner_biderivation(const StructureAlgebra& a, const Vec& l) {
  return Biderivation::make(a, -a.right_mult(l), a.left_mult(l));
}

Restriction restrict_map(const StructureAlgebra& alg, const Subspace& a,
                         const Matrix& m) {
  if (m.rows() != alg.dim() || m.cols() != alg.dim()) {
    throw usage_error("restrict_map: map must be n x n");
  }
  const std::size_t k = a.dim();
  Matrix on_a(alg.field(), k, k);
  for (std::size_t s = 0; s < k; ++s) {
    Vec img = m.apply(a.basis()[s]);
    auto coords = a.coordinates_of(img);
    if (!coords) {
      Restriction r;
      r.escape_witness = std::move(img);
      r.witness_basis_index = s;
      return r;
    }
    for (std::size_t r = 0; r < k; ++r) on_a.at(r, s) = (*coords)[r];
  }
  Restriction r;
  r.on_subspace = std::move(on_a);
  return r;
}

Vec MapOnSubspace::apply(const Vec& x) const {
  auto coords = domain.coordinates_of(x);
  if (!coords) throw usage_error("element outside the map's domain");
  return images.apply(*coords);
}

bool satisfies_law_on_domain(const StructureAlgebra& a, const MapOnSubspace& m,
                             MapKind kind) {
  const std::size_t k = m.domain.dim();
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t u = 0; u < k; ++u) {
      const Vec& bs = m.domain.basis()[s];
      const Vec& bu = m.domain.basis()[u];
      Vec w = a.bracket(bs, bu);
      auto coords = m.domain.coordinates_of(w);
      if (!coords) throw usage_error("map domain is not bracket-closed");
      Vec lhs = m.images.apply(*coords);
      Vec img_s = m.images.column(s);
      Vec img_u = m.images.column(u);
      Vec rhs = kind == MapKind::derivation
                    ? vec_add(a.bracket(img_s, bu), a.bracket(bs, img_u))
                    : vec_sub(a.bracket(img_s, bu), a.bracket(img_u, bs));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

AssignmentResult map_from_assignment(const StructureAlgebra& a,
                                     const std::vector<std::pair<Vec, Vec>>& gens,
                                     MapKind kind, bool span_only) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vec> sources;
  for (const auto& [x, y] : gens) {
    if (x.size() != n || y.size() != n) {
      throw usage_error("assignment vectors must match the algebra dimension");
    }
    sources.push_back(x);
  }
  const Subspace domain = span_only ? Subspace::span(f, n, sources)
                                    : a.subalgebra_generated(sources);
  const std::size_t k = domain.dim();

  // Unknowns: images matrix entries M_{r,v} at index r*k + v.
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  auto new_row = [&]() -> Vec& {
    rows.push_back(vec_zero(f, n * k));
    rhs.push_back(Scalar::zero(f));
    return rows.back();
  };

  // Pinned values.
  for (const auto& [x, y] : gens) {
    auto alpha = domain.coordinates_of(x);
    if (!alpha) throw usage_error("assignment source escaped its own span");
    for (std::size_t r = 0; r < n; ++r) {
      Vec& row = new_row();
      for (std::size_t v = 0; v < k; ++v) row[r * k + v] += (*alpha)[v];
      rhs.back() = y[r];
    }
  }

  // The defining law on domain basis pairs. With span_only a pair whose
  // bracket leaves the span has no image under the map and imposes nothing.
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t u = 0; u < k; ++u) {
      const Vec& bs = domain.basis()[s];
      const Vec& bu = domain.basis()[u];
      auto gamma = domain.coordinates_of(a.bracket(bs, bu));
      if (!gamma) {
        if (span_only) continue;
        throw invariant_violation("generated subalgebra is not bracket-closed");
      }
      const Matrix r_bu = a.right_mult(bu);
      const Matrix mixed = kind == MapKind::derivation ? a.left_mult(bs)
                                                       : a.right_mult(bs);
      for (std::size_t r = 0; r < n; ++r) {
        Vec& row = new_row();
        for (std::size_t v = 0; v < k; ++v) row[r * k + v] += (*gamma)[v];
        for (std::size_t m = 0; m < n; ++m) {
          // -[M(b_s), b_u]_r
          if (!r_bu.at(r, m).is_zero()) row[m * k + s] -= r_bu.at(r, m);
          if (kind == MapKind::derivation) {
            // -[b_s, M(b_u)]_r
            if (!mixed.at(r, m).is_zero()) row[m * k + u] -= mixed.at(r, m);
          } else {
            // +[M(b_u), b_s]_r
            if (!mixed.at(r, m).is_zero()) row[m * k + u] += mixed.at(r, m);
          }
        }
      }
    }
  }

  Matrix sys = Matrix::from_rows(f, rows, n * k);
  SolveCertificate cert = solve_with_certificate(sys, rhs);
  AssignmentResult result;
  if (!cert.solution) {
    result.contradiction = std::move(cert.infeasibility);
    result.detail =
        "assignment is inconsistent: a combination of the constraints reduces "
        "to 0 = nonzero";
    return result;
  }
  Matrix images(f, n, k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t v = 0; v < k; ++v) images.at(r, v) = (*cert.solution)[r * k + v];
  result.map = MapOnSubspace{domain, std::move(images)};
  return result;
}

}  // namespace leibcas
