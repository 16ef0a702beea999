#include <doctest.h>

#include "qpascal/qcomb.hpp"

using namespace qpascal;

namespace {

FieldElem P(const char* s) { return FieldElem::parse(s); }

long choose(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

QPoly q_pow(unsigned r) {
  std::vector<BigRational> c(r + 1);
  c[r] = 1;
  return QPoly(c, "q");
}

FieldElem eval_at(const QPoly& p, const FieldElem& q) {
  FieldElem acc, power(1);
  for (const auto& c : p.coeffs()) {
    acc += FieldElem(c) * power;
    power *= q;
  }
  return acc;
}

}  // namespace

TEST_SUITE("qcomb") {

TEST_CASE("q-integers") {
  CHECK(q_int(5, QContext(FieldElem(1))) == FieldElem(5));
  const QContext z3(FieldElem::zeta(3));
  CHECK(q_int(3, z3).is_zero());
  CHECK(q_int(5, z3) == P("1 + z(3)"));
  CHECK(q_int(0, z3).is_zero());
  CHECK_THROWS_AS(QContext(FieldElem(0)), Error);
}

TEST_CASE("q-factorials") {
  const QContext z3(FieldElem::zeta(3));
  CHECK(q_factorial(0, z3) == FieldElem(1));
  CHECK(q_factorial(3, QContext(FieldElem(1))) == FieldElem(6));
  CHECK(q_factorial(3, z3).is_zero());
}

TEST_CASE("q-binomials") {
  const QContext sym(FieldElem::indeterminate());
  for (unsigned n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0, sym) == FieldElem(1));
  // (3)_q (1 + q^2) expanded by hand.
  const std::vector<BigRational> expect{1, 1, 2, 1, 1};
  CHECK(q_binomial_poly(4, 2).coeffs() == expect);
  CHECK(q_binomial_poly(4, 2).to_string() == "q^4 + q^3 + 2*q^2 + q + 1");
  CHECK(q_binomial(5, 2, sym) == P("(1 + L^2)*(1 + L + L^2 + L^3 + L^4)"));
  CHECK_THROWS_AS(q_binomial(2, 3, sym), Error);
}

TEST_CASE("q_r exponents") {
  const QContext sym(FieldElem::indeterminate());
  CHECK(q_triangular(0, sym) == FieldElem(1));
  CHECK(q_triangular(1, sym) == FieldElem(1));
  CHECK(q_triangular(5, sym) == P("L^10"));
}

TEST_CASE("q-exponential of nilpotent matrices") {
  const QContext one(FieldElem(1));
  CHECK(q_exp_nilpotent(ExactMatrix(3, 3), one) == ExactMatrix::identity(3));
  ExactMatrix e01(2, 2);
  e01(0, 1) = 1;
  CHECK(q_exp_nilpotent(e01, one) == ExactMatrix::identity(2) + e01);

  ExactMatrix n(6, 6);
  for (unsigned k = 0; k < 5; ++k) n(k, k + 1) = q_int(k + 1, one);
  const ExactMatrix ex = q_exp_nilpotent(n, one);
  for (long i = 0; i < 6; ++i)
    for (long j = 0; j < 6; ++j)
      CHECK(ex(i, j) == FieldElem(j >= i ? choose(j, i) : 0));

  ExactMatrix lower(2, 2);
  lower(1, 0) = 1;
  CHECK_THROWS_AS(q_exp_nilpotent(lower, one), Error);

  const QContext z3(FieldElem::zeta(3));
  ExactMatrix m(4, 4);
  for (unsigned k = 0; k < 3; ++k) m(k, k + 1) = 1;
  try {
    q_exp_nilpotent(m, z3);
    FAIL("expected QFactorialVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QFactorialVanishes);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  ExactMatrix short_chain(4, 4);
  short_chain(0, 1) = 1;
  short_chain(1, 2) = 1;
  CHECK_NOTHROW(q_exp_nilpotent(short_chain, z3));
}

TEST_CASE("q-Pascal recurrence and symmetry") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned r = 1; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const QPoly rhs = q_binomial_poly(n - 1, r - 1) + (r <= n - 1 ? q_pow(r) * q_binomial_poly(n - 1, r) : QPoly({}, "q"));
      CHECK(q_binomial_poly(n, r) == rhs);
    }
    for (unsigned r = 0; r <= n; ++r) CHECK(q_binomial_poly(n, r) == q_binomial_poly(n, n - r));
  }
}

TEST_CASE("classical limit") {
  const QContext one(FieldElem(1));
  long fact = 1;
  for (unsigned n = 0; n <= 12; ++n) {
    if (n > 0) fact *= n;
    CHECK(q_int(n, one) == FieldElem(static_cast<long>(n)));
    CHECK(q_factorial(n, one) == FieldElem(fact));
    for (unsigned r = 0; r <= n; ++r) CHECK(q_binomial(n, r, one) == FieldElem(choose(n, r)));
  }
}

TEST_CASE("evaluation commutes with specialisation") {
  const QContext sym(FieldElem::indeterminate());
  for (unsigned long cond : {3ul, 4ul, 9ul, 12ul}) {
    const FieldElem z = FieldElem::zeta(cond);
    const QContext ctx(z);
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned r = 0; r <= n; ++r) {
        CHECK(q_binomial(n, r, ctx) == eval_at(q_binomial_poly(n, r), z));
        CHECK(q_binomial(n, r, sym).specialize(z.cyc()) == q_binomial(n, r, ctx));
      }
  }
}

}
