#pragma once

#include <optional>
#include <vector>

#include "qpascal/matrix.hpp"
#include "qpascal/qcomb.hpp"

namespace qpascal {

// m^#_{ij} = m_{n-i,n-j} (rotation by 180 degrees).
ExactMatrix sharp(const ExactMatrix& m);
// m^s_{ij} = m_{n-j,n-i} (transpose across the anti-diagonal).
ExactMatrix s_transform(const ExactMatrix& m);

// a_{km} = binom(n-k, n-m)_q for k <= m, zero below the diagonal.
ExactMatrix build_A(unsigned n, const QContext& ctx);
// diag(q_0, ..., q_n).
ExactMatrix build_D(unsigned n, const QContext& ctx);

struct RepParams {
  unsigned n = 0;
  FieldElem q{1};
  std::vector<FieldElem> lambdas;  // lambda_0 ... lambda_n
  FieldElem c{1};
};

// Throws ZeroParameter, ShapeMismatch or LambdaConditionViolated.
void validate(const RepParams& p);

// Fills lambda_{n-i} = c / lambda_i from lambda_0 ... lambda_{floor(n/2)}.
// For even n the middle value must square to c.
std::vector<FieldElem> complete_lambdas(unsigned n, const std::vector<FieldElem>& first_half,
                                        const FieldElem& c);

struct BraidRep {
  RepParams params;
  ExactMatrix sigma1;
  ExactMatrix sigma2;
};

bool braid_relation_holds(const ExactMatrix& s1, const ExactMatrix& s2);

// sigma1 = A(q) D(q)^# Lambda, sigma2 = Lambda^# D(q) ((A(1/q))^-1)^#.
// The braid relation is checked before returning; a failure throws
// BraidRelationFailed.
BraidRep build_rep(const RepParams& params);

// exp_q(sum_k (k+1)_q E_{k,k+1}) - q_{n-r} lambda_r (D(q) Lambda^#)^-1.
ExactMatrix f_operator(unsigned r, unsigned n, const QContext& ctx,
                       const std::vector<FieldElem>& lambdas);

struct MinorWitness {
  unsigned r = 0;
  std::vector<std::size_t> rows;
  FieldElem value;
};

struct OperatorCriterion {
  bool irreducible = false;
  std::vector<MinorWitness> witnesses;  // one per r that admits a nonzero minor
  std::optional<unsigned> failing_r;     // first r without one
};

// For each r <= n/2, looks for rows i_0 < ... < i_{n-r-1} such that the minor
// of (F_{r,n})^s on those rows and columns r+1..n is nonzero. Row sets are
// tried in lexicographic order and the first hit is kept. An empty minor
// counts as 1.
OperatorCriterion operator_irred_criterion_q1(unsigned n, const std::vector<FieldElem>& lambdas);

// (n)_q != 0.
bool identity_lambda_irreducible(unsigned n, const QContext& ctx);

}  // namespace qpascal
