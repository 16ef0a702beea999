#pragma once

#include <string>

#include "qpascal/cyclotomic.hpp"

namespace qpascal {

// Name of the single indeterminate (lambda_1) in text and polynomials.
inline constexpr const char* kIndeterminate = "L";

// Element of Q(zeta_N)(L). Always stored in lowest terms with a monic
// denominator, so equality is structural.
class RatFunc {
 public:
  RatFunc() : num_({}, kIndeterminate), den_(CycPoly::constant(CycElem(1), kIndeterminate)) {}
  RatFunc(const CycElem& c);
  RatFunc(CycPoly num);
  RatFunc(CycPoly num, CycPoly den);

  static RatFunc indeterminate();

  const CycPoly& numerator() const { return num_; }
  const CycPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  CycElem constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  // Re-runs canonicalisation; the result equals *this.
  RatFunc normalized() const { return RatFunc(num_, den_); }

  // Specialises L := at. Throws DivisionByZero if the denominator vanishes.
  CycElem evaluate(const CycElem& at) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(CycPoly num, CycPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  CycPoly num_;
  CycPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.to_string(); }

}  // namespace qpascal
