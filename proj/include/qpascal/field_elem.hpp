#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qpascal/cyclotomic.hpp"
#include "qpascal/ratfunc.hpp"

namespace qpascal {

// An exact scalar: a rational, an element of a cyclotomic field, or a
// rational function in L over a cyclotomic field. Rational functions that
// turn out constant are stored as cyclotomic elements, so is_symbolic()
// means "genuinely depends on L".
class FieldElem {
 public:
  FieldElem() : v_(CycElem()) {}
  FieldElem(int v) : v_(CycElem(v)) {}
  FieldElem(long v) : v_(CycElem(v)) {}
  FieldElem(const BigRational& v) : v_(CycElem(v)) {}
  FieldElem(const CycElem& v) : v_(v) {}
  FieldElem(const RatFunc& v);

  static FieldElem zeta(unsigned long n, long k = 1) { return FieldElem(CycElem::zeta(n, k)); }
  static FieldElem indeterminate() { return FieldElem(RatFunc::indeterminate()); }

  bool is_symbolic() const { return std::holds_alternative<RatFunc>(v_); }
  bool is_zero() const;
  bool is_one() const;

  // Throws InvalidArgument when symbolic.
  const CycElem& cyc() const;
  RatFunc as_ratfunc() const;

  // Conductor of the cyclotomic field holding the value (or its coefficients).
  unsigned long conductor() const;
  FieldElem embedded(unsigned long conductor) const;

  FieldElem inverse() const;
  FieldElem pow(long e) const;
  // Substitutes L := value; constants pass through unchanged.
  FieldElem specialize(const CycElem& value) const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::string to_string() const;

  // Parses the exact-field text syntax (see expr_parser.hpp).
  static FieldElem parse(std::string_view text);

 private:
  std::variant<CycElem, RatFunc> v_;
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline std::string to_string(const FieldElem& x) { return x.to_string(); }

}  // namespace qpascal
