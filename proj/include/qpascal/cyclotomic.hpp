#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpascal/bigrational.hpp"
#include "qpascal/poly.hpp"

namespace qpascal {

unsigned long euler_phi(unsigned long n);

// Phi_n over Q, monic of degree euler_phi(n); obtained by dividing x^n - 1 by
// Phi_d for every proper divisor d of n.
QPoly cyclotomic_polynomial(unsigned long n);

// Q(zeta_N) realised as Q[x]/Phi_N(x). Immutable once built.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned long conductor);

  static std::shared_ptr<const CyclotomicField> make(unsigned long conductor);

  unsigned long conductor() const { return conductor_; }
  std::size_t degree() const { return modulus_.coeffs().size() - 1; }
  const QPoly& modulus() const { return modulus_; }

  // Reduces an arbitrary coefficient vector (lowest degree first) modulo
  // Phi_N and pads to exactly degree() entries.
  std::vector<BigRational> reduce(std::vector<BigRational> coeffs) const;

 private:
  unsigned long conductor_;
  QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// An element of Q(zeta_N): the class of sum coeffs[i] x^i modulo Phi_N with
// fewer than phi(N) coefficients. Elements of Q carry no field object
// (conductor 1). Binary operations on different conductors embed both
// operands into Q(zeta_lcm).
class CycElem {
 public:
  CycElem() : coeffs_{BigRational(0)} {}
  CycElem(int v) : coeffs_{BigRational(v)} {}
  CycElem(long v) : coeffs_{BigRational(v)} {}
  CycElem(const BigRational& v) : coeffs_{v} {}
  CycElem(FieldPtr field, std::vector<BigRational> coeffs);

  // zeta_n^k for any integer k.
  static CycElem zeta(unsigned long n, long k = 1);

  unsigned long conductor() const { return field_ ? field_->conductor() : 1; }
  const FieldPtr& field() const { return field_; }
  // Exactly max(1, phi(conductor)) coefficients.
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q, whatever the conductor.
  bool is_rational() const;
  const BigRational& rational_value() const;

  CycElem inverse() const;
  CycElem pow(long e) const;

  CycElem operator-() const;
  friend CycElem operator+(const CycElem& a, const CycElem& b);
  friend CycElem operator-(const CycElem& a, const CycElem& b);
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  friend CycElem operator/(const CycElem& a, const CycElem& b);
  CycElem& operator+=(const CycElem& o) { return *this = *this + o; }
  CycElem& operator-=(const CycElem& o) { return *this = *this - o; }
  CycElem& operator*=(const CycElem& o) { return *this = *this * o; }
  CycElem& operator/=(const CycElem& o) { return *this = *this / o; }
  friend bool operator==(const CycElem& a, const CycElem& b);
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  // Canonical text: rationals as "a/b", otherwise a sum of c*z(N)^k terms in
  // increasing k.
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<BigRational> coeffs_;
};

inline bool is_zero(const CycElem& e) { return e.is_zero(); }
inline std::string to_string(const CycElem& e) { return e.to_string(); }

// Image of e under zeta_N -> zeta_M^(M/N). Throws ConductorMismatch unless
// conductor(e) divides m.
CycElem embed(const CycElem& e, unsigned long m);
CycElem embed(const CycElem& e, const FieldPtr& target);

unsigned long lcm_conductor(unsigned long a, unsigned long b);

using CycPoly = Poly<CycElem>;

}  // namespace qpascal
