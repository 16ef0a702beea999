#pragma once

#include "qpascal/field_elem.hpp"
#include "qpascal/matrix.hpp"

namespace qpascal {

// The deformation parameter q (nonzero; may be symbolic in L).
class QContext {
 public:
  explicit QContext(FieldElem q);
  const FieldElem& q() const { return q_; }

 private:
  FieldElem q_;
};

// (j)_q = 1 + q + ... + q^(j-1); (0)_q = 0.
FieldElem q_int(unsigned j, const QContext& ctx);
// (j)!_q = (1)_q ... (j)_q; (0)!_q = 1.
FieldElem q_factorial(unsigned j, const QContext& ctx);

// Gaussian binomial as a polynomial in the variable "q", built with the
// Pascal recurrence binom(n,r) = binom(n-1,r-1) + q^r binom(n-1,r).
QPoly q_binomial_poly(unsigned n, unsigned r);
// q_binomial_poly(n, r) evaluated at ctx.q(). Throws IndexOutOfRange for r > n.
FieldElem q_binomial(unsigned n, unsigned r, const QContext& ctx);

// q_r = q^(r(r-1)/2).
FieldElem q_triangular(unsigned r, const QContext& ctx);

// sum_k m^k / (k)!_q over k below the nilpotency index of a strictly upper
// triangular m. Throws QFactorialVanishes when a needed (k)!_q is zero.
ExactMatrix q_exp_nilpotent(const ExactMatrix& m, const QContext& ctx);

}  // namespace qpascal
