#include "qpascal/dim6.hpp"

namespace qpascal {

FieldElem dim6_q() { return FieldElem::zeta(3); }

bool dim6_admissible(const FieldElem& l) {
  if (l.is_zero()) return false;
  if (l.is_symbolic()) return true;
  const FieldElem q = dim6_q();
  return l != FieldElem(1) && l != FieldElem(-1) && l != q && l != q * q;
}

ExactMatrix dim6_sigma1_display(const FieldElem& l) {
  const FieldElem q = dim6_q(), q2 = q * q, li = l.inverse();
  const FieldElem o(0), one(1);
  return {
      {q, -q2 * l, q2, q2, -q2 * li, one},
      {o, l, q2, o, li, one},
      {o, o, q2, o, o, one},
      {o, o, o, q2, -q2 * li, one},
      {o, o, o, o, li, one},
      {o, o, o, o, o, one},
  };
}

ExactMatrix dim6_sigma2_display(const FieldElem& l) {
  const FieldElem q = dim6_q(), q2 = q * q, li = l.inverse();
  const FieldElem o(0), one(1);
  return {
      {one, o, o, o, o, o},
      {-li, li, o, o, o, o},
      {q, one, q2, o, o, o},
      {-q2, o, o, q2, o, o},
      {l, -l, o, -l, l, o},
      {-one, -q2, -q, one, q2, q},
  };
}

RepParams dim6_params(const FieldElem& l) {
  const FieldElem q = dim6_q();
  RepParams p;
  p.n = 5;
  p.q = q;
  p.lambdas = {FieldElem(1), l, q * q, q, l.inverse(), FieldElem(1)};
  p.c = FieldElem(1);
  return p;
}

Dim6Rep build_dim6(const FieldElem& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroParameter, "lambda1 must be nonzero");
  Dim6Rep rep{l, dim6_sigma1_display(l), dim6_sigma2_display(l), dim6_admissible(l)};
  const BraidRep general = build_rep(dim6_params(l));
  if (general.sigma1 != rep.rho1 || general.sigma2 != rep.rho2)
    throw Error(ErrorCode::Internal, "displayed six-dimensional matrices disagree with the general construction");
  return rep;
}

std::array<FieldElem, 6> dim6_eigenvalues(const FieldElem& l) {
  const FieldElem q = dim6_q();
  return {q, l, q * q, q * q, l.inverse(), FieldElem(1)};
}

namespace {

void require_admissible(const FieldElem& l) {
  if (!dim6_admissible(l))
    throw Error(ErrorCode::InadmissibleLambda,
                "lambda1 = " + l.to_string() + " lies in {0, -1, 1, q, q^2}");
}

}  // namespace

ExactVector u3_as_displayed(const FieldElem& l) {
  const FieldElem q = dim6_q(), q2 = q * q, o(0);
  return {l + q, q - FieldElem(1), (l + q2) * (q2 - q), o, o, o};
}

std::array<ExactVector, 6> eigenvectors_u(const FieldElem& l) {
  require_admissible(l);
  const FieldElem q = dim6_q(), q2 = q * q, o(0), one(1);
  const FieldElem l2 = l * l, l3 = l2 * l;
  std::array<ExactVector, 6> u{
      ExactVector{one, o, o, o, o, o},
      ExactVector{-l * (one + q), -l + q, o, o, o, o},
      ExactVector{l + q, q - one, (q2 - l) * (q2 - q), o, o, o},
      ExactVector{-one, o, o, q2 - one, o, o},
      ExactVector{q - l3, (one - l * q) * (l * q - q2), o, -q * (one - l2) * (-one + l * q),
                  (-one + l2) * (-one + l * q) * (l * q - q2), o},
      ExactVector{l * q2 - FieldElem(2) * l + FieldElem(3) + FieldElem(3) * l2 + l * q,
                  FieldElem(3) * q * (l * q - one), FieldElem(-3) * q2 * (one - l) * (one - l),
                  FieldElem(-3) * (-one + l) * (one + l * q2), FieldElem(3) * q * (one - q) * l * (-one + l),
                  FieldElem(3) * q * (one - q) * (-one + l) * (-one + l)},
  };
  const ExactMatrix rho1 = dim6_sigma1_display(l);
  const auto mu = dim6_eigenvalues(l);
  for (std::size_t i = 0; i < 6; ++i)
    if (rho1 * u[i] != mu[i] * u[i])
      throw Error(ErrorCode::Internal, "u_" + std::to_string(i + 1) + " is not an eigenvector");
  return u;
}

DiagonalizedPair diagonalize(const Dim6Rep& rep) {
  require_admissible(rep.lambda1);
  const auto u = eigenvectors_u(rep.lambda1);
  const ExactMatrix p = ExactMatrix::from_columns(u);
  ExactMatrix pinv = [&] {
    try {
      return inverse(p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularMatrix)
        throw Error(ErrorCode::Internal, "transition matrix singular at admissible lambda1");
      throw;
    }
  }();
  ExactMatrix x = pinv * rep.rho1 * p;
  const auto mu = dim6_eigenvalues(rep.lambda1);
  if (x != ExactMatrix::diagonal(mu)) throw Error(ErrorCode::Internal, "conjugated sigma1 is not the expected diagonal");
  ExactMatrix y = pinv * rep.rho2 * p;
  return {rep.lambda1, p, std::move(x), std::move(y)};
}

ExactVector k_column(const DiagonalizedPair& pair, unsigned i) {
  if (i < 1 || i > 6) throw Error(ErrorCode::IndexOutOfRange, "K-column index must be in 1..6");
  return pair.Y.column(i - 1);
}

}  // namespace qpascal
