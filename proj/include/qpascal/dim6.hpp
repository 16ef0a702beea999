#pragma once

#include <array>

#include "qpascal/braidrep.hpp"

namespace qpascal {

// The six-dimensional family at q = z(3) with lambda = (1, l, q^2, q, 1/l, 1)
// and c = 1. lambda1 is either a cyclotomic value or the indeterminate L.
struct Dim6Rep {
  FieldElem lambda1;
  ExactMatrix rho1;
  ExactMatrix rho2;
  bool admissible = false;
};

struct DiagonalizedPair {
  FieldElem lambda1;
  ExactMatrix P;
  ExactMatrix X;
  ExactMatrix Y;
};

// z(3).
FieldElem dim6_q();

// lambda1 != 0 and lambda1 not in {-1, 1, q, q^2}. The indeterminate counts
// as admissible.
bool dim6_admissible(const FieldElem& lambda1);

// The two 6x6 generator images written out entry by entry.
ExactMatrix dim6_sigma1_display(const FieldElem& lambda1);
ExactMatrix dim6_sigma2_display(const FieldElem& lambda1);

RepParams dim6_params(const FieldElem& lambda1);

// Builds the displayed matrices and checks them against build_rep.
// Throws ZeroParameter for lambda1 = 0.
Dim6Rep build_dim6(const FieldElem& lambda1);

// (q, l, q^2, q^2, 1/l, 1).
std::array<FieldElem, 6> dim6_eigenvalues(const FieldElem& lambda1);

// u_1 ... u_6 (index 0 ... 5), each checked against rho1 u = mu u.
// Throws InadmissibleLambda.
std::array<ExactVector, 6> eigenvectors_u(const FieldElem& lambda1);

// The third eigenvector exactly as it is usually displayed,
// (l + q, q - 1, (l + q^2)(q^2 - q), 0, 0, 0). It is not an eigenvector;
// eigenvectors_u uses (q^2 - l)(q^2 - q) in the third slot instead.
ExactVector u3_as_displayed(const FieldElem& lambda1);

// P = (u_1 ... u_6), X = P^-1 rho1 P, Y = P^-1 rho2 P. Throws
// InadmissibleLambda.
DiagonalizedPair diagonalize(const Dim6Rep& rep);

// Column i (1-based, 1..6) of Y. Throws IndexOutOfRange.
ExactVector k_column(const DiagonalizedPair& pair, unsigned i);

}  // namespace qpascal
