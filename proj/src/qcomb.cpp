#include "qpascal/qcomb.hpp"

#include <vector>

namespace qpascal {

QContext::QContext(FieldElem q) : q_(std::move(q)) {
  if (q_.is_zero()) throw Error(ErrorCode::ZeroParameter, "q must be nonzero");
}

FieldElem q_int(unsigned j, const QContext& ctx) {
  FieldElem sum;
  FieldElem power(1);
  for (unsigned i = 0; i < j; ++i) {
    sum += power;
    power *= ctx.q();
  }
  return sum;
}

FieldElem q_factorial(unsigned j, const QContext& ctx) {
  FieldElem prod(1);
  for (unsigned i = 1; i <= j; ++i) prod *= q_int(i, ctx);
  return prod;
}

QPoly q_binomial_poly(unsigned n, unsigned r) {
  if (r > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "q-binomial (" + std::to_string(n) + ", " + std::to_string(r) + ") needs r <= n");
  const QPoly one = QPoly::constant(BigRational(1), "q");
  std::vector<QPoly> row{one};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<QPoly> next(m + 1);
    next[0] = one;
    next[m] = one;
    for (unsigned k = 1; k < m; ++k)
      next[k] = row[k - 1] + QPoly::monomial(BigRational(1), k, "q") * row[k];
    row = std::move(next);
  }
  return row[r];
}

FieldElem q_binomial(unsigned n, unsigned r, const QContext& ctx) {
  return q_binomial_poly(n, r).evaluate(ctx.q());
}

FieldElem q_triangular(unsigned r, const QContext& ctx) {
  const long e = static_cast<long>(r) * (static_cast<long>(r) - 1) / 2;
  return ctx.q().pow(e);
}

ExactMatrix q_exp_nilpotent(const ExactMatrix& m, const QContext& ctx) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "q-exponential of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!m(i, j).is_zero())
        throw Error(ErrorCode::InvalidArgument, "q-exponential needs a strictly upper triangular matrix");
  ExactMatrix sum = ExactMatrix::identity(m.rows());
  ExactMatrix power = ExactMatrix::identity(m.rows());
  FieldElem fact(1);
  for (unsigned k = 1; k < m.rows(); ++k) {
    power = power * m;
    if (power.is_zero()) break;
    fact *= q_int(k, ctx);
    if (fact.is_zero())
      throw Error(ErrorCode::QFactorialVanishes,
                  "(" + std::to_string(k) + ")!_q vanishes at q = " + ctx.q().to_string());
    sum = sum + fact.inverse() * power;
  }
  return sum;
}

}  // namespace qpascal
