#include "qpascal/field_elem.hpp"

#include "qpascal/expr_parser.hpp"

namespace qpascal {

namespace {

unsigned long poly_conductor(const CycPoly& p) {
  unsigned long c = 1;
  for (const auto& k : p.coeffs()) c = lcm_conductor(c, k.conductor());
  return c;
}

CycPoly embed_poly(const CycPoly& p, const FieldPtr& target) {
  std::vector<CycElem> v;
  v.reserve(p.coeffs().size());
  for (const auto& k : p.coeffs()) v.push_back(embed(k, target));
  return CycPoly(std::move(v), p.var());
}

}  // namespace

FieldElem::FieldElem(const RatFunc& v) {
  if (v.is_constant()) v_ = v.constant_value();
  else v_ = v;
}

bool FieldElem::is_zero() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return c->is_zero();
  return false;
}

bool FieldElem::is_one() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return c->is_one();
  return false;
}

const CycElem& FieldElem::cyc() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return *c;
  throw Error(ErrorCode::InvalidArgument, "expected a constant, got symbolic " + to_string());
}

RatFunc FieldElem::as_ratfunc() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return RatFunc(*c);
  return std::get<RatFunc>(v_);
}

unsigned long FieldElem::conductor() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return c->conductor();
  const auto& f = std::get<RatFunc>(v_);
  return lcm_conductor(poly_conductor(f.numerator()), poly_conductor(f.denominator()));
}

FieldElem FieldElem::embedded(unsigned long m) const {
  if (auto* c = std::get_if<CycElem>(&v_)) return FieldElem(embed(*c, m));
  const auto& f = std::get<RatFunc>(v_);
  if (m % conductor() != 0)
    throw Error(ErrorCode::ConductorMismatch, "cannot embed " + to_string() + " into Q(z(" +
                                                  std::to_string(m) + "))");
  FieldPtr target = m == 1 ? FieldPtr() : CyclotomicField::make(m);
  return FieldElem(RatFunc(embed_poly(f.numerator(), target), embed_poly(f.denominator(), target)));
}

FieldElem FieldElem::inverse() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return FieldElem(c->inverse());
  return FieldElem(std::get<RatFunc>(v_).inverse());
}

FieldElem FieldElem::pow(long e) const {
  if (auto* c = std::get_if<CycElem>(&v_)) return FieldElem(c->pow(e));
  return FieldElem(std::get<RatFunc>(v_).pow(e));
}

FieldElem FieldElem::specialize(const CycElem& value) const {
  if (!is_symbolic()) return *this;
  return FieldElem(std::get<RatFunc>(v_).evaluate(value));
}

FieldElem FieldElem::operator-() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return FieldElem(-*c);
  return FieldElem(-std::get<RatFunc>(v_));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return FieldElem(a.cyc() + b.cyc());
  return FieldElem(a.as_ratfunc() + b.as_ratfunc());
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return FieldElem(a.cyc() - b.cyc());
  return FieldElem(a.as_ratfunc() - b.as_ratfunc());
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return FieldElem(a.cyc() * b.cyc());
  if (a.is_zero() || b.is_zero()) return FieldElem();
  return FieldElem(a.as_ratfunc() * b.as_ratfunc());
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return FieldElem(a.cyc() / b.cyc());
  return FieldElem(a.as_ratfunc() / b.as_ratfunc());
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.is_symbolic() != b.is_symbolic()) return false;
  if (!a.is_symbolic()) return a.cyc() == b.cyc();
  return std::get<RatFunc>(a.v_) == std::get<RatFunc>(b.v_);
}

std::string FieldElem::to_string() const {
  if (auto* c = std::get_if<CycElem>(&v_)) return c->to_string();
  return std::get<RatFunc>(v_).to_string();
}

FieldElem FieldElem::parse(std::string_view text) { return parse_field_elem(text); }

}  // namespace qpascal
