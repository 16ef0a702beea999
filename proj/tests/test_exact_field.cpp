#include <doctest.h>

#include <numeric>

#include "qpascal/expr_parser.hpp"
#include "qpascal/field_elem.hpp"
#include "qpascal/qcomb.hpp"
#include "support/gen.hpp"

using namespace qpascal;
using qpascal::testgen::Gen;

namespace {

using IntPoly = std::vector<long>;  // lowest degree first

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic integer polynomial.
IntPoly div_monic(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (long x : a) REQUIRE(x == 0);
  return q;
}

int mobius(unsigned long n) {
  int m = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// Phi_N = prod_{d | N} (x^d - 1)^mu(N/d).
IntPoly phi_oracle(unsigned long n) {
  IntPoly num{1}, den{1};
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return div_monic(num, den);
}

IntPoly int_coeffs(const QPoly& p) {
  IntPoly r;
  for (const auto& c : p.coeffs()) {
    REQUIRE(c.get_den() == 1);
    r.push_back(c.get_num().get_si());
  }
  return r;
}

// x^k mod a monic integer polynomial.
IntPoly power_mod(unsigned k, const IntPoly& m) {
  IntPoly r(k + 1, 0);
  r[k] = 1;
  const std::size_t d = m.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    const long c = r[i];
    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] -= c * m[j];
  }
  r.resize(d);
  return r;
}

FieldElem P(const char* s) { return FieldElem::parse(s); }

template <class T>
void check_axioms(const T& a, const T& b, const T& c) {
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == T());
  if (!a.is_zero()) CHECK(a * a.inverse() == T(1));
}

}  // namespace

TEST_SUITE("exact-field") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).to_string() == "x - 1");
  CHECK(cyclotomic_polynomial(3).to_string() == "x^2 + x + 1");
  CHECK(int_coeffs(cyclotomic_polynomial(12)) == IntPoly{1, 0, -1, 0, 1});
  for (unsigned long n = 1; n <= 36; ++n) {
    CAPTURE(n);
    CHECK(int_coeffs(cyclotomic_polynomial(n)) == phi_oracle(n));
    CHECK(cyclotomic_polynomial(n).degree() == static_cast<int>(euler_phi(n)));
  }
}

TEST_CASE("Phi_N vanishes at z(N)") {
  for (unsigned long n = 1; n <= 36; ++n) {
    CAPTURE(n);
    const QPoly phi = cyclotomic_polynomial(n);
    CycElem acc;
    const CycElem z = CycElem::zeta(n);
    for (std::size_t i = 0; i < phi.coeffs().size(); ++i) acc += CycElem(phi.coeffs()[i]) * z.pow(static_cast<long>(i));
    CHECK(acc.is_zero());
    CHECK(z.pow(static_cast<long>(n)).is_one());
  }
}

TEST_CASE("embedding") {
  CHECK(embed(CycElem::zeta(3), 9) == CycElem::zeta(9, 3));
  CHECK(embed(CycElem(5), 7) == CycElem(5));
  const CycElem z3sq12 = embed(CycElem::zeta(3, 2), 12);
  // x^8 mod x^4 - x^2 + 1
  const IntPoly r = power_mod(8, {1, 0, -1, 0, 1});
  CycElem expect;
  for (std::size_t i = 0; i < r.size(); ++i) expect += CycElem(r[i]) * CycElem::zeta(12, static_cast<long>(i));
  CHECK(z3sq12 == expect);
  CHECK(z3sq12 == CycElem::zeta(12, 8));
  CHECK_THROWS_AS(embed(CycElem::zeta(9), 12), Error);
  try {
    embed(CycElem::zeta(9), 12);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConductorMismatch);
  }
}

TEST_CASE("embedding is an injective ring homomorphism") {
  Gen g(11);
  const std::pair<unsigned long, unsigned long> towers[] = {{3, 9}, {3, 12}, {4, 12}, {9, 36}, {12, 36}, {5, 15}};
  for (auto [n, m] : towers) {
    for (int i = 0; i < 100; ++i) {
      const CycElem a = g.cyc(n), b = g.cyc(n);
      CHECK(embed(a * b, m) == embed(a, m) * embed(b, m));
      CHECK(embed(a + b, m) == embed(a, m) + embed(b, m));
      CHECK((embed(a, m) == embed(b, m)) == (a == b));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  for (unsigned long n : {1ul, 3ul, 9ul, 12ul, 36ul}) {
    CAPTURE(n);
    Gen g(100 + n);
    for (int i = 0; i < 1000; ++i) check_axioms(g.cyc(n), g.cyc(n), g.cyc(n));
  }
}

TEST_CASE("mixed conductors combine in the lcm field") {
  Gen g(5);
  for (int i = 0; i < 1000; ++i) {
    const CycElem a = g.cyc(9), b = g.cyc(12), c = g.cyc(4);
    check_axioms(a, b, c);
    CHECK(36 % (a * b).conductor() == 0);
  }
}

TEST_CASE("rational function axioms and canonical form") {
  Gen g(17);
  for (int i = 0; i < 1000; ++i) {
    const RatFunc a = g.ratfunc(3, 2), b = g.ratfunc(3, 2), c = g.ratfunc(3, 1);
    check_axioms(a, b, c);
    CHECK(a.normalized() == a);
    CHECK(a.normalized().normalized() == a.normalized());
    if (!a.is_zero()) CHECK(a.denominator().leading().is_one());
    CHECK(gcd(a.numerator(), a.denominator()).degree() == 0);
  }
}

TEST_CASE("inverse") {
  CHECK(FieldElem(1).inverse() == FieldElem(1));
  CHECK(P("z(3)").inverse() == P("z(3)^2"));
  CHECK(P("z(3)").inverse() == P("-1 - z(3)"));
  CHECK(P("(L-1)/(L+1)").inverse() == P("(L+1)/(L-1)"));
  CHECK_THROWS_AS(FieldElem(0).inverse(), Error);
  CHECK_THROWS_AS(RatFunc().inverse(), Error);
}

TEST_CASE("polynomial gcd") {
  const QPoly x = QPoly::indeterminate("x");
  const QPoly one = QPoly::constant(BigRational(1), "x");
  CHECK(gcd(x * x - one, x - one) == x - one);
  const CycPoly L = CycPoly::indeterminate("L");
  const CycElem q = CycElem::zeta(3);
  const CycPoly a = L * L * L - CycPoly::constant(q, "L");
  const CycPoly b = L * L + CycPoly::constant(q, "L");
  CHECK(gcd(a, b).degree() == 0);
  // Oracle: the roots of L^2 + q are z(12)^5 and z(12)^11; neither cubes to q.
  for (long k : {5, 11}) {
    const CycElem r = CycElem::zeta(12, k);
    CHECK((r * r + q).is_zero());
    CHECK(!(r.pow(3) - q).is_zero());
  }
  const CycPoly p = CycPoly::constant(CycElem(3), "L") * a;
  CHECK(gcd(p, p) == a);
  CHECK(gcd(p, CycPoly({}, "L")) == a);
}

TEST_CASE("q-integer anchor") {
  const QContext ctx(FieldElem::zeta(3));
  CHECK(q_int(3, ctx).is_zero());
  CHECK(!q_int(2, ctx).is_zero());
  CHECK(!q_int(3, QContext(FieldElem::zeta(4))).is_zero());
}

TEST_CASE("parser") {
  CHECK(P("1/2 + 1/2*z(12)^3").to_string() == "1/2 + 1/2*z(12)^3");
  CHECK(P("z(9)^-2") == P("z(9)^7"));
  CHECK(P("L^(-1)") == P("1/L"));
  CHECK(P("(L^2 - 1)/(L - 1)") == P("L + 1"));
  CHECK(P("-(3)") == FieldElem(-3));
  CHECK(P("2^10") == FieldElem(1024));
  for (const char* bad : {"", "2+", "z(0)", "z(3", "L L", "1/0", "(1", "2^L", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("1 + * 2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK(split_top_level("1,(L,2),z(3)") == std::vector<std::string>{"1", "(L,2)", "z(3)"});
}

TEST_CASE("parse and print round trip") {
  Gen g(23);
  for (unsigned long n : {1ul, 3ul, 9ul, 12ul}) {
    for (int i = 0; i < 200; ++i) {
      const FieldElem e(g.cyc(n));
      CHECK(FieldElem::parse(e.to_string()) == e);
    }
  }
  for (int i = 0; i < 200; ++i) {
    const FieldElem f(g.ratfunc(3, 3));
    CAPTURE(f.to_string());
    CHECK(FieldElem::parse(f.to_string()) == f);
  }
}

TEST_CASE("specialisation commutes with arithmetic") {
  Gen g(29);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a(g.ratfunc(3, 2)), b(g.ratfunc(3, 2));
    const CycElem at = g.cyc(9);
    try {
      CHECK((a * b).specialize(at) == a.specialize(at) * b.specialize(at));
      CHECK((a + b).specialize(at) == a.specialize(at) + b.specialize(at));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }
}

}
