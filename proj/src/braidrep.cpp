#include "qpascal/braidrep.hpp"

namespace qpascal {

ExactMatrix sharp(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "sharp of a non-square matrix");
  const std::size_t n = m.rows() - 1;
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) r(i, j) = m(n - i, n - j);
  return r;
}

ExactMatrix s_transform(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "s-transform of a non-square matrix");
  const std::size_t n = m.rows() - 1;
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) r(i, j) = m(n - j, n - i);
  return r;
}

ExactMatrix build_A(unsigned n, const QContext& ctx) {
  ExactMatrix a(n + 1, n + 1);
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned m = k; m <= n; ++m) a(k, m) = q_binomial(n - k, n - m, ctx);
  return a;
}

ExactMatrix build_D(unsigned n, const QContext& ctx) {
  ExactMatrix d(n + 1, n + 1);
  for (unsigned r = 0; r <= n; ++r) d(r, r) = q_triangular(r, ctx);
  return d;
}

void validate(const RepParams& p) {
  if (p.q.is_zero()) throw Error(ErrorCode::ZeroParameter, "q must be nonzero");
  if (p.c.is_zero()) throw Error(ErrorCode::ZeroParameter, "c must be nonzero");
  if (p.lambdas.size() != p.n + 1)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(p.n + 1) + " lambdas, got " +
                                              std::to_string(p.lambdas.size()));
  for (std::size_t i = 0; i <= p.n; ++i)
    if (p.lambdas[i].is_zero())
      throw Error(ErrorCode::ZeroParameter, "lambda_" + std::to_string(i) + " must be nonzero");
  for (std::size_t i = 0; i <= p.n; ++i)
    if (p.lambdas[i] * p.lambdas[p.n - i] != p.c)
      throw Error(ErrorCode::LambdaConditionViolated,
                  "lambda_" + std::to_string(i) + " * lambda_" + std::to_string(p.n - i) + " = " +
                      (p.lambdas[i] * p.lambdas[p.n - i]).to_string() + " differs from c = " + p.c.to_string());
}

std::vector<FieldElem> complete_lambdas(unsigned n, const std::vector<FieldElem>& first_half,
                                        const FieldElem& c) {
  if (first_half.size() != n / 2 + 1)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n / 2 + 1) + " leading lambdas");
  if (c.is_zero()) throw Error(ErrorCode::ZeroParameter, "c must be nonzero");
  std::vector<FieldElem> out(n + 1);
  for (std::size_t i = 0; i < first_half.size(); ++i) {
    if (first_half[i].is_zero())
      throw Error(ErrorCode::ZeroParameter, "lambda_" + std::to_string(i) + " must be nonzero");
    out[i] = first_half[i];
    out[n - i] = c / first_half[i];
  }
  if (n % 2 == 0 && out[n / 2] * out[n / 2] != c)
    throw Error(ErrorCode::LambdaConditionViolated, "middle lambda must square to c");
  return out;
}

bool braid_relation_holds(const ExactMatrix& s1, const ExactMatrix& s2) {
  return s1 * s2 * s1 == s2 * s1 * s2;
}

BraidRep build_rep(const RepParams& params) {
  validate(params);
  const unsigned n = params.n;
  const QContext ctx(params.q);
  const QContext inv_ctx(params.q.inverse());
  const ExactMatrix lambda = ExactMatrix::diagonal(params.lambdas);
  const ExactMatrix d = build_D(n, ctx);

  ExactMatrix s1 = build_A(n, ctx) * sharp(d) * lambda;
  ExactMatrix s2 = sharp(lambda) * d * sharp(inverse(build_A(n, inv_ctx)));

  if (!s1.is_upper_triangular() || !s2.is_lower_triangular())
    throw Error(ErrorCode::Internal, "generator images lost their triangular shape");
  if (!braid_relation_holds(s1, s2))
    throw Error(ErrorCode::BraidRelationFailed, "braid relation fails for n = " + std::to_string(n));
  return {params, std::move(s1), std::move(s2)};
}

ExactMatrix f_operator(unsigned r, unsigned n, const QContext& ctx, const std::vector<FieldElem>& lambdas) {
  if (r > n) throw Error(ErrorCode::IndexOutOfRange, "F_{r,n} needs r <= n");
  if (lambdas.size() != n + 1)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n + 1) + " lambdas");
  ExactMatrix nil(n + 1, n + 1);
  for (unsigned k = 0; k < n; ++k) nil(k, k + 1) = q_int(k + 1, ctx);
  const ExactMatrix e = q_exp_nilpotent(nil, ctx);
  const ExactMatrix dl = build_D(n, ctx) * sharp(ExactMatrix::diagonal(lambdas));
  const FieldElem scale = q_triangular(n - r, ctx) * lambdas[r];
  return e - scale * inverse(dl);
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

OperatorCriterion operator_irred_criterion_q1(unsigned n, const std::vector<FieldElem>& lambdas) {
  const QContext ctx(FieldElem(1));
  OperatorCriterion out;
  for (unsigned r = 0; r <= n / 2; ++r) {
    const std::size_t k = n - r;
    if (k == 0) {
      out.witnesses.push_back({r, {}, FieldElem(1)});
      continue;
    }
    const ExactMatrix fs = s_transform(f_operator(r, n, ctx, lambdas));
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = r + 1 + j;
    std::vector<std::size_t> rows(k);
    for (std::size_t j = 0; j < k; ++j) rows[j] = j;
    bool found = false;
    do {
      FieldElem v = minor(fs, rows, cols);
      if (!v.is_zero()) {
        out.witnesses.push_back({r, rows, v});
        found = true;
        break;
      }
    } while (next_combination(rows, n + 1));
    if (!found) {
      out.failing_r = r;
      out.irreducible = false;
      return out;
    }
  }
  out.irreducible = true;
  return out;
}

bool identity_lambda_irreducible(unsigned n, const QContext& ctx) { return !q_int(n, ctx).is_zero(); }

}  // namespace qpascal
