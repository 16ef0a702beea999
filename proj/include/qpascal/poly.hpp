#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qpascal/bigrational.hpp"
#include "qpascal/errors.hpp"

namespace qpascal {

namespace detail {
// Free-function dispatch for coefficient types; Poly's own members of the same
// name would otherwise hide these.
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
template <class K>
std::string coeff_to_string(const K& c) {
  return to_string(c);
}
}  // namespace detail

// Dense univariate polynomial over an exact field K.
//
// K must be default-constructible to zero, constructible from int, closed
// under + - * / and unary minus, and provide is_zero(K) and to_string(K)
// reachable from this namespace. Coefficients are stored lowest degree first
// and the leading coefficient is always nonzero (the zero polynomial is the
// empty sequence).
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static Poly constant(const K& c, std::string var = "x") {
    return Poly(std::vector<K>{c}, std::move(var));
  }
  static Poly monomial(const K& c, std::size_t degree, std::string var = "x") {
    std::vector<K> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v), std::move(var));
  }
  static Poly indeterminate(std::string var = "x") {
    return monomial(K(1), 1, std::move(var));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(); }
  const K& leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<K>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  Poly with_var(std::string var) const { return Poly(coeffs_, std::move(var)); }

  Poly operator-() const {
    std::vector<K> v;
    v.reserve(coeffs_.size());
    for (const K& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v), var_);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.coeffs_.size() && i < b.coeffs_.size()) v[i] = a.coeffs_[i] + b.coeffs_[i];
      else if (i < a.coeffs_.size()) v[i] = a.coeffs_[i];
      else v[i] = b.coeffs_[i];
    }
    return Poly(std::move(v), a.pick_var(b));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly({}, a.pick_var(b));
    std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (detail::coeff_is_zero(b.coeffs_[j])) continue;
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(v), a.pick_var(b));
  }
  friend Poly operator*(const K& s, const Poly& p) {
    if (detail::coeff_is_zero(s)) return Poly({}, p.var_);
    std::vector<K> v;
    v.reserve(p.coeffs_.size());
    for (const K& c : p.coeffs_) v.push_back(s * c);
    return Poly(std::move(v), p.var_);
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / leading();
    return inv * *this;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly({}, var_);
    std::vector<K> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v[i - 1] = K(static_cast<int>(i)) * coeffs_[i];
    return Poly(std::move(v), var_);
  }

  // Horner evaluation in any ring V that accepts K-coefficients.
  template <class V>
  V evaluate(const V& x) const {
    V acc = V();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + V(coeffs_[i]);
    return acc;
  }

  // Canonical text in the exact-field syntax, highest degree first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (detail::coeff_is_zero(coeffs_[i])) continue;
      std::string c = detail::coeff_to_string(coeffs_[i]);
      bool negative = false;
      bool compound = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
      if (!compound && !c.empty() && c[0] == '-') {
        negative = true;
        c.erase(0, 1);
      }
      if (compound && !(out.empty() && i == 0)) c = "(" + c + ")";
      std::string mono;
      if (i == 1) mono = var_;
      else if (i > 1) mono = var_ + "^" + std::to_string(i);
      std::string term;
      if (mono.empty()) term = c;
      else if (c == "1") term = mono;
      else term = c + "*" + mono;
      if (out.empty()) out = negative ? "-" + term : term;
      else out += negative ? " - " + term : " + " + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  const std::string& pick_var(const Poly& other) const {
    return (is_constant() && !other.is_constant()) ? other.var_ : var_;
  }

  std::vector<K> coeffs_;
  std::string var_ = "x";
};

template <class K>
std::string to_string(const Poly<K>& p) {
  return p.to_string();
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>({}, a.var()), a};
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(a.coeffs().size() - b.coeffs().size() + 1);
  const K inv = K(1) / b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = quo.size(); i-- > 0;) {
    K c = rem[i + db] * inv;
    quo[i] = c;
    if (detail::coeff_is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly<K>(std::move(quo), a.var()), Poly<K>(std::move(rem), a.var())};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

// Quotient of an exact division; throws if b does not divide a.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g the monic gcd.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const Poly<K>& a, const Poly<K>& b) {
  const std::string& v = a.var();
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(K(1), v), s1({}, v);
  Poly<K> t0({}, v), t1 = Poly<K>::constant(K(1), v);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<K> s2 = s0 - q * s1;
    Poly<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<K>({}, a.var());
  return exact_quotient(a * b, gcd(a, b)).monic();
}

// p / gcd(p, p'), monic. Characteristic zero, so this has the same roots as p
// with every multiplicity reduced to one.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

template <class K>
Poly<K> pow(const Poly<K>& p, unsigned e) {
  Poly<K> result = Poly<K>::constant(K(1), p.var());
  Poly<K> base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

using QPoly = Poly<BigRational>;

}  // namespace qpascal
