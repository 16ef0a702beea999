#include "qpascal/ratfunc.hpp"

namespace qpascal {

namespace {

CycPoly one_poly() { return CycPoly::constant(CycElem(1), kIndeterminate); }

}  // namespace

RatFunc::RatFunc(const CycElem& c)
    : num_(CycPoly::constant(c, kIndeterminate)), den_(one_poly()) {}

RatFunc::RatFunc(CycPoly num) : num_(num.with_var(kIndeterminate)), den_(one_poly()) {}

RatFunc::RatFunc(CycPoly num, CycPoly den)
    : num_(num.with_var(kIndeterminate)), den_(den.with_var(kIndeterminate)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::indeterminate() { return RatFunc(CycPoly::indeterminate(kIndeterminate)); }

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (den_.degree() > 0) {
    CycPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const CycElem lc = den_.leading();
  if (!lc.is_one()) {
    const CycElem inv = lc.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

CycElem RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "rational function is not constant");
  return num_.is_zero() ? CycElem() : num_.coeffs()[0];
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  // Already coprime: only the new denominator's leading coefficient needs fixing.
  RatFunc r(den_, num_, Raw{});
  const CycElem inv = r.den_.leading().inverse();
  r.num_ = inv * r.num_;
  r.den_ = inv * r.den_;
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(qpascal::pow(num_, static_cast<unsigned>(e)), qpascal::pow(den_, static_cast<unsigned>(e)), Raw{});
  return r;
}

CycElem RatFunc::evaluate(const CycElem& at) const {
  CycElem d = den_.evaluate(at);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at " + at.to_string());
  return num_.evaluate(at) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  // Cross-cancel first so the products stay small.
  CycPoly g1 = gcd(a.num_, b.den_);
  CycPoly g2 = gcd(b.num_, a.den_);
  CycPoly n1 = exact_quotient(a.num_, g1), d2 = exact_quotient(b.den_, g1);
  CycPoly n2 = exact_quotient(b.num_, g2), d1 = exact_quotient(a.den_, g2);
  CycPoly num = n1 * n2;
  CycPoly den = d1 * d2;
  const CycElem inv = den.leading().inverse();
  return RatFunc(inv * num, inv * den, RatFunc::Raw{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qpascal
