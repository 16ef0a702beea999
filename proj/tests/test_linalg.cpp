#include <doctest.h>

#include "qpascal/braidrep.hpp"
#include "qpascal/dim6.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace qpascal;
using qpascal::testgen::Gen;

namespace {

FieldElem P(const char* s) { return FieldElem::parse(s); }

ExactVector e(std::size_t i) { return ExactVector::unit(6, i); }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("products") {
  Gen g(1);
  const ExactMatrix m = g.matrix(3, 4, 3);
  CHECK(ExactMatrix::identity(3) * m == m);
  CHECK(m * ExactMatrix::identity(4) == m);
  CHECK_THROWS_AS(m * m, Error);
  const QContext ctx(FieldElem::zeta(3));
  const ExactMatrix d = build_D(5, ctx);
  CHECK(d * inverse(d) == ExactMatrix::identity(6));
}

TEST_CASE("generator product at the six-dimensional parameters") {
  const FieldElem l = FieldElem::indeterminate();
  const QContext ctx(dim6_q());
  const RepParams p = dim6_params(l);
  const ExactMatrix sigma1 = build_A(5, ctx) * sharp(build_D(5, ctx)) * ExactMatrix::diagonal(p.lambdas);
  CHECK(sigma1 == dim6_sigma1_display(l));
}

TEST_CASE("inverse") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK(inverse(ExactMatrix::identity(k)) == ExactMatrix::identity(k));
  const QContext ctx(FieldElem::zeta(3));
  const ExactMatrix a = build_A(5, ctx);
  CHECK(determinant(a) == FieldElem(1));
  CHECK(a * inverse(a) == ExactMatrix::identity(6));
  ExactMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(inverse(s), Error);
  try {
    inverse(s);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("conjugation diagonalises sigma1") {
  const FieldElem l = FieldElem::indeterminate();
  const Dim6Rep rep = build_dim6(l);
  const auto u = eigenvectors_u(l);
  const ExactMatrix p = ExactMatrix::from_columns(u);
  CHECK(inverse(p) * rep.rho1 * p == ExactMatrix::diagonal(dim6_eigenvalues(l)));
}

TEST_CASE("kernel bases") {
  const auto k0 = kernel_basis(ExactMatrix(2, 2));
  REQUIRE(k0.size() == 2);
  CHECK(k0[0] == ExactVector::unit(2, 0));
  CHECK(k0[1] == ExactVector::unit(2, 1));

  const FieldElem l = P("2");
  const FieldElem q = dim6_q();
  const ExactMatrix rho1 = build_dim6(l).rho1;
  const ExactMatrix id = ExactMatrix::identity(6);
  const auto kq = kernel_basis(rho1 - q * id);
  REQUIRE(kq.size() == 1);
  CHECK(rank(ExactMatrix::from_columns(std::vector<ExactVector>{kq[0], e(0)})) == 1);

  const auto kq2 = kernel_basis(rho1 - q * q * id);
  CHECK(kq2.size() == 2);
  const auto u = eigenvectors_u(l);
  CHECK(in_span(u[2], kq2));
  CHECK(in_span(u[3], kq2));
}

TEST_CASE("span membership examples") {
  const ExactVector v{P("1"), P("z(3)"), P("0")};
  CHECK(in_span(v, std::vector<ExactVector>{v}));
  CHECK(!in_span(v, std::vector<ExactVector>{}));
  CHECK(in_span(ExactVector(3), std::vector<ExactVector>{}));

  // Column 5 of P^-1 rho2 P at l = 2, recomputed by solving P k = rho2 u5.
  {
    const FieldElem l = P("2");
    const Dim6Rep rep = build_dim6(l);
    const auto u = eigenvectors_u(l);
    const ExactMatrix p = ExactMatrix::from_columns(u);
    const auto k5 = oracle::solve(p, (rep.rho2 * u[4]).entries());
    REQUIRE(k5.has_value());
    CHECK(!(*k5)[2].is_zero());
    const ExactVector k5v(*k5);
    CHECK(k5v == k_column(diagonalize(rep), 5));
    CHECK(!in_span(k5v, std::vector<ExactVector>{e(4)}));
  }
  {
    const FieldElem l = P("z(9)^2");
    const DiagonalizedPair d = diagonalize(build_dim6(l));
    const std::vector<ExactVector> s{-l * e(2) + e(3), e(0), e(4), e(5)};
    CHECK(in_span(k_column(d, 1), s));
  }
}

TEST_CASE("minors") {
  ExactMatrix m{{P("3"), P("z(3)")}, {P("1"), P("2")}};
  const std::size_t r0[] = {0};
  CHECK(minor(m, r0, r0) == P("3"));
  const ExactMatrix i4 = ExactMatrix::identity(4);
  const std::size_t a[] = {0, 1}, b[] = {2, 3}, bad[] = {1, 0}, three[] = {0, 1, 2};
  CHECK(minor(i4, a, a) == FieldElem(1));
  CHECK(minor(i4, a, b) == FieldElem(0));
  CHECK_THROWS_AS(minor(i4, bad, a), Error);
  CHECK_THROWS_AS(minor(i4, a, three), Error);
}

TEST_CASE("inverse is an involution on random 6x6 matrices") {
  Gen g(2);
  for (int i = 0; i < 100; ++i) {
    const ExactMatrix m = g.invertible(6, 3);
    const ExactMatrix inv = inverse(m);
    CHECK(m * inv == ExactMatrix::identity(6));
    CHECK(inverse(inv) == m);
  }
}

TEST_CASE("rank plus nullity") {
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 6));
    const std::size_t c = static_cast<std::size_t>(g.integer(1, 6));
    const std::size_t k = static_cast<std::size_t>(g.integer(0, static_cast<long>(std::min(r, c))));
    const ExactMatrix m = k == 0 ? ExactMatrix(r, c) : g.of_rank(r, c, k, i % 2 ? 3 : 12);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) == k);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) CHECK((m * v).is_zero());
    if (!ker.empty()) CHECK(rank(ExactMatrix::from_columns(ker)) == ker.size());
  }
}

TEST_CASE("in_span agrees with the solver oracle") {
  Gen g(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    const std::size_t k = static_cast<std::size_t>(g.integer(0, static_cast<long>(n)));
    std::vector<ExactVector> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(g.matrix(n, 1, 3).column(0));
    ExactVector v = g.matrix(n, 1, 3).column(0);
    if (g.coin() && !basis.empty()) {
      v = ExactVector(n);
      for (const auto& b : basis) v = v + FieldElem(g.cyc(3, 4)) * b;
    }
    CHECK(in_span(v, basis) == oracle::in_span(v, basis));
  }
}

TEST_CASE("full minors match cofactor expansion") {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const ExactMatrix m = g.matrix(n, n, i % 3 ? 3 : 9, 0.7);
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    CHECK(minor(m, idx, idx) == oracle::det_cofactor(m));
    CHECK(determinant(m) == oracle::det_cofactor(m));
  }
  for (int i = 0; i < 100; ++i) {
    const ExactMatrix m = g.matrix(5, 5, 3);
    const std::size_t rows[] = {0, 2, 4}, cols[] = {1, 2, 3};
    ExactMatrix sub(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) sub(a, b) = m(rows[a], cols[b]);
    CHECK(minor(m, rows, cols) == oracle::det_cofactor(sub));
  }
}

TEST_CASE("symbolic elimination specialises consistently") {
  Gen g(6);
  const FieldElem l = FieldElem::indeterminate();
  for (int i = 0; i < 30; ++i) {
    ExactMatrix m = g.matrix(3, 3, 3);
    m(0, 0) = m(0, 0) + l;
    m(1, 2) = m(1, 2) * l;
    if (determinant(m).is_zero()) continue;
    const CycElem at = g.cyc(9);
    FieldElem d;
    try {
      d = determinant(m).specialize(at);
    } catch (const Error&) {
      continue;
    }
    CHECK(d == determinant(m.specialize(at)));
  }
}

TEST_CASE("rref pivots") {
  ExactMatrix m{{P("0"), P("2"), P("4")}, {P("0"), P("1"), P("2")}, {P("1"), P("0"), P("1")}};
  const RrefResult r = rref(m);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == ExactMatrix{{P("1"), P("0"), P("1")}, {P("0"), P("1"), P("2")}, {P("0"), P("0"), P("0")}});
}

}
