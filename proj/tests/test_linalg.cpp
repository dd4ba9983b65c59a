#include <doctest.h>

#include "helpers.hpp"
#include "leibcas/errors.hpp"
#include "leibcas/rng.hpp"

using namespace leibcas;
using testutil::q;
using testutil::qvec;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::gfp(5);
}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  CHECK(Scalar::of(Q, 2, 4).to_string() == "1/2");
  CHECK(Scalar::of(Q, -2, -4).to_string() == "1/2");
  CHECK(Scalar::of(Q, 1, -3).to_string() == "-1/3");
  CHECK(Scalar::parse(Q, "7/21") == Scalar::of(Q, 1, 3));
  CHECK((Scalar::of(Q, 1, 3) + Scalar::of(Q, 1, 6)) == Scalar::of(Q, 1, 2));
  CHECK(Scalar::of(Q, 3, 4).inverse() == Scalar::of(Q, 4, 3));

  CHECK(Scalar::of(F5, 7) == Scalar::of(F5, 2));
  CHECK(Scalar::of(F5, -1) == Scalar::of(F5, 4));
  CHECK(Scalar::parse(F5, "1/2") == Scalar::of(F5, 3));  // 2*3 = 6 = 1
  CHECK((Scalar::of(F5, 4) * Scalar::of(F5, 4)) == Scalar::of(F5, 1));
  CHECK_THROWS_AS(Scalar::of(F5, 0).inverse(), usage_error);
  CHECK_THROWS_AS(Field::gfp(6), usage_error);
  CHECK_THROWS_AS((void)(Scalar::of(Q, 1) + Scalar::of(F5, 1)), usage_error);
}

TEST_CASE("rref identity and zero cases") {
  Matrix id = Matrix::identity(Q, 2);
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  Matrix zero(Q, 3, 3);
  r = rref(zero);
  CHECK(r.reduced == zero);
  CHECK(r.pivots.empty());
}

TEST_CASE("rref of a rank-one 2x2") {
  // Hand row-reduction: [[1,2],[2,4]] -> [[1,2],[0,0]], pivot column 0.
  Matrix m = Matrix::from_rows(Q, {qvec({1, 2}), qvec({2, 4})}, 2);
  RrefResult r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced.row(0) == qvec({1, 2}));
  CHECK(r.reduced.row(1) == qvec({0, 0}));
}

TEST_CASE("null space canonical bases") {
  CHECK(null_space(Matrix::identity(Q, 3)).dim() == 0);
  CHECK(null_space(Matrix(Q, 3, 3)).dim() == 3);

  // Solved by hand: kernel of [1 1] is spanned by (1, -1).
  Matrix m = Matrix::from_rows(Q, {qvec({1, 1})}, 2);
  Subspace ker = null_space(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis()[0] == qvec({1, -1}));
}

TEST_CASE("solve: identity, inconsistent, diagonal") {
  Vec b = qvec({3, 5});
  CHECK(*solve(Matrix::identity(Q, 2), b) == b);

  CHECK_FALSE(solve(Matrix(Q, 2, 2), qvec({1, 0})).has_value());

  Matrix diag(Q, 2, 2);
  diag.at(0, 0) = q(2);
  diag.at(1, 1) = q(3);
  Vec x = *solve(diag, qvec({1, 1}));
  CHECK(x == Vec{q(1, 2), q(1, 3)});
}

TEST_CASE("solve certificate witnesses inconsistency") {
  // x + y = 1, x + y = 2 is contradictory; the certificate combination must
  // annihilate the matrix but not the rhs.
  Matrix m = Matrix::from_rows(Q, {qvec({1, 1}), qvec({1, 1})}, 2);
  Vec b = qvec({1, 2});
  SolveCertificate cert = solve_with_certificate(m, b);
  REQUIRE_FALSE(cert.solution.has_value());
  REQUIRE(cert.infeasibility.has_value());
  const Vec& y = *cert.infeasibility;
  Vec yTm = m.transpose().apply(y);
  CHECK(vec_is_zero(yTm));
  Scalar yTb = Scalar::zero(Q);
  for (std::size_t i = 0; i < y.size(); ++i) yTb += y[i] * b[i];
  CHECK_FALSE(yTb.is_zero());
}

TEST_CASE("rank-nullity on random small matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = trial % 2 == 0 ? Q : F5;
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f);
    CHECK(rank(m) + null_space(m).dim() == cols);

    // When solve succeeds the solution satisfies the system exactly.
    Vec b;
    for (std::size_t i = 0; i < rows; ++i) b.push_back(rng.scalar(f));
    if (auto x = solve(m, b)) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("subspace canonical form is generator-order independent") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec> gens;
    for (int g = 0; g < 4; ++g) gens.push_back(rng.element(Q, 4));
    Subspace a = Subspace::span(Q, 4, gens);
    std::vector<Vec> shuffled = gens;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    // Also rescale one generator.
    shuffled[0] = vec_scale(q(3), shuffled[0]);
    Subspace b = Subspace::span(Q, 4, shuffled);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
  }
}

TEST_CASE("subspace sum, intersection, membership, quotient map") {
  Subspace e1 = Subspace::span(Q, 2, {qvec({1, 0})});
  Subspace e2 = Subspace::span(Q, 2, {qvec({0, 1})});

  CHECK(e1.sum(e1) == e1);
  CHECK(e1.intersect(Subspace::full(Q, 2)) == e1);
  CHECK(e1.intersect(e2).dim() == 0);
  CHECK(e1.sum(e2) == Subspace::full(Q, 2));

  CHECK(e1.contains(qvec({5, 0})));
  CHECK_FALSE(e1.contains(qvec({5, 1})));

  Matrix quot = e1.quotient_map();
  REQUIRE(quot.rows() == 1);
  CHECK(vec_is_zero(quot.apply(qvec({7, 0}))));
  CHECK_FALSE(vec_is_zero(quot.apply(qvec({0, 7}))));

  CHECK_THROWS_AS(e1.sum(Subspace::full(Q, 3)), usage_error);
}

TEST_CASE("quotient map kernel is exactly the subspace") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(rng.element(F5, 4));
    Subspace a = Subspace::span(F5, 4, gens);
    CHECK(null_space(a.quotient_map()) == a);
  }
}
