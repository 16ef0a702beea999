#include "qpascal/cyclotomic.hpp"

#include <map>
#include <numeric>

namespace qpascal {

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi(0)");
  unsigned long result = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

QPoly cyclotomic_memo(unsigned long n, std::map<unsigned long, QPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<BigRational> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  QPoly p(std::move(c));
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) p = exact_quotient(p, cyclotomic_memo(d, memo));
  memo.emplace(n, p);
  return p;
}

}  // namespace

QPoly cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic_polynomial needs n >= 1");
  std::map<unsigned long, QPoly> memo;
  return cyclotomic_memo(n, memo);
}

unsigned long lcm_conductor(unsigned long a, unsigned long b) { return std::lcm(a, b); }

CyclotomicField::CyclotomicField(unsigned long conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {}

FieldPtr CyclotomicField::make(unsigned long conductor) {
  return std::make_shared<const CyclotomicField>(conductor);
}

std::vector<BigRational> CyclotomicField::reduce(std::vector<BigRational> c) const {
  const auto& m = modulus_.coeffs();
  const std::size_t d = degree();
  for (std::size_t i = c.size(); i-- > d;) {
    if (is_zero(c[i])) continue;
    const BigRational top = c[i];
    // m is monic: x^d = -(m_0 + ... + m_{d-1} x^{d-1})
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(m[j])) c[i - d + j] -= top * m[j];
    c[i] = 0;
  }
  c.resize(d);
  return c;
}

CycElem::CycElem(FieldPtr field, std::vector<BigRational> coeffs) : field_(std::move(field)) {
  if (!field_ || field_->conductor() == 1) {
    // Q(zeta_1) = Q: x = 1, so the value is the coefficient sum.
    BigRational s = 0;
    for (const auto& c : coeffs) s += c;
    field_.reset();
    coeffs_ = {s};
    return;
  }
  coeffs_ = field_->reduce(std::move(coeffs));
}

CycElem CycElem::zeta(unsigned long n, long k) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "z(0) is not a root of unity");
  if (n == 1) return CycElem(1);
  long r = k % static_cast<long>(n);
  if (r < 0) r += static_cast<long>(n);
  std::vector<BigRational> c(static_cast<std::size_t>(r) + 1);
  c[static_cast<std::size_t>(r)] = 1;
  return CycElem(CyclotomicField::make(n), std::move(c));
}

bool CycElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycElem::is_one() const { return is_rational() && coeffs_[0] == 1; }

const BigRational& CycElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational");
  return coeffs_[0];
}

namespace {

// Brings a and b into one field. Rational operands never force an embedding.
std::pair<CycElem, CycElem> unify(const CycElem& a, const CycElem& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  if (a.is_rational() && !b.is_rational())
    return {CycElem(b.field(), {a.coeffs()[0]}), b};
  if (b.is_rational() && !a.is_rational())
    return {a, CycElem(a.field(), {b.coeffs()[0]})};
  if (a.is_rational() && b.is_rational())
    return {CycElem(a.coeffs()[0]), CycElem(b.coeffs()[0])};
  const unsigned long l = lcm_conductor(a.conductor(), b.conductor());
  if (l == a.conductor()) return {a, embed(b, a.field())};
  if (l == b.conductor()) return {embed(a, b.field()), b};
  FieldPtr target = CyclotomicField::make(l);
  return {embed(a, target), embed(b, target)};
}

}  // namespace

CycElem embed(const CycElem& e, const FieldPtr& target) {
  const unsigned long n = e.conductor();
  const unsigned long m = target ? target->conductor() : 1;
  if (m % n != 0)
    throw Error(ErrorCode::ConductorMismatch, "cannot embed Q(z(" + std::to_string(n) +
                                                  ")) into Q(z(" + std::to_string(m) + "))");
  if (n == m) return CycElem(target, e.coeffs());
  if (e.is_rational()) return CycElem(target, {e.coeffs()[0]});
  const unsigned long step = m / n;
  std::vector<BigRational> c((e.coeffs().size() - 1) * step + 1);
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) c[i * step] = e.coeffs()[i];
  return CycElem(target, std::move(c));
}

CycElem embed(const CycElem& e, unsigned long m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  if (m % e.conductor() != 0)
    throw Error(ErrorCode::ConductorMismatch, "cannot embed Q(z(" + std::to_string(e.conductor()) +
                                                  ")) into Q(z(" + std::to_string(m) + "))");
  return embed(e, m == 1 ? FieldPtr() : CyclotomicField::make(m));
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElem operator+(const CycElem& a, const CycElem& b) {
  if (a.conductor() != b.conductor()) {
    auto [x, y] = unify(a, b);
    return x + y;
  }
  CycElem r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }

CycElem operator*(const CycElem& a, const CycElem& b) {
  if (a.is_rational() || b.is_rational()) {
    const CycElem& s = a.is_rational() ? a : b;
    const CycElem& o = a.is_rational() ? b : a;
    CycElem r = o;
    const BigRational k = s.coeffs_[0];
    for (auto& c : r.coeffs_) c *= k;
    return r;
  }
  if (a.conductor() != b.conductor()) {
    auto [x, y] = unify(a, b);
    return x * y;
  }
  std::vector<BigRational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycElem(a.field_, std::move(prod));
}

CycElem CycElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    BigRational inv = 1 / coeffs_[0];
    return CycElem(field_, {inv});
  }
  QPoly a(coeffs_);
  auto [g, s, t] = xgcd(a, field_->modulus());
  (void)t;
  // Phi_N is irreducible and a is a nonzero class, so g = 1.
  return CycElem(field_, s.coeffs());
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

CycElem CycElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycElem result(field_, {BigRational(1)});
  CycElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycElem& a, const CycElem& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  if (a.is_rational() != b.is_rational()) return false;
  if (a.conductor() != b.conductor()) {
    auto [x, y] = unify(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

std::string CycElem::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  const std::string z = "z(" + std::to_string(conductor()) + ")";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigRational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const BigRational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else {
      std::string mono = k == 1 ? z : z + "^" + std::to_string(k);
      term = mag == 1 ? mono : mag.get_str() + "*" + mono;
    }
    if (out.empty()) out = negative ? "-" + term : term;
    else out += negative ? " - " + term : " + " + term;
  }
  return out;
}

}  // namespace qpascal
