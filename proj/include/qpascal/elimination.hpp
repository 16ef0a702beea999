#pragma once

#include <vector>

#include "qpascal/ratfunc.hpp"

namespace qpascal {

// A polynomial in the line parameter a whose coefficients lie in K[L],
// lowest degree first. Trailing zero coefficients are trimmed.
using APoly = std::vector<CycPoly>;

void trim(APoly& p);
long degree(const APoly& p);

// m divided by every factor it shares with e (m squarefree).
CycPoly remove_factors(CycPoly m, const CycPoly& e);

// One branch of a dynamic-evaluation gcd: on every root of modulus the
// specialised system has gcd equal to the specialised `gcd` (monic, or the
// zero polynomial when every input vanishes there).
struct SplitLeaf {
  CycPoly modulus;
  APoly gcd;
  // A common root in a exists: the gcd is zero or has positive degree.
  bool solvable() const { return gcd.empty() || gcd.size() > 1; }
};

// gcd of the system in (K[L]/(modulus))[a]. The squarefree modulus is split
// whenever a leading coefficient turns out to be a zero divisor, so the
// result partitions the roots of modulus.
std::vector<SplitLeaf> dynamic_gcd(const std::vector<APoly>& polys, const CycPoly& modulus);

struct SolveResult {
  // True when the system has a common root in a for all L outside a finite set.
  bool generic = false;
  // Monic squarefree moduli of the solvable leaves; their roots (minus those
  // of `excluded`) are exactly the L where a common root exists.
  std::vector<CycPoly> leaves;
};

// Decides for which L the system {p(a, L) = 0} has a common solution a in C.
// Values of L that are roots of `excluded` are ignored.
SolveResult solve_parameter_system(const std::vector<APoly>& polys, const CycPoly& excluded);

}  // namespace qpascal
