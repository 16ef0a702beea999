#pragma once

#include <gmpxx.h>

#include <string>

namespace qpascal {

using BigInt = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator once canonicalized; every constructor path below canonicalizes.
using BigRational = mpq_class;

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline BigRational make_rational(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qpascal
