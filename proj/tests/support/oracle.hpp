#pragma once

#include <optional>
#include <vector>

#include "qpascal/matrix.hpp"

namespace qpascal::oracle {

// Deliberately naive routines that share no code with the library's
// elimination. Only the field arithmetic is reused.

inline FieldElem det_cofactor(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return FieldElem(1);
  if (n == 1) return m(0, 0);
  FieldElem acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    ExactMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) sub(i - 1, c++) = m(i, k);
    const FieldElem t = m(0, j) * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

// Solves m x = b by forward elimination with back substitution on the
// augmented system, scanning pivots from the last row upwards.
inline std::optional<std::vector<FieldElem>> solve(const ExactMatrix& m, const std::vector<FieldElem>& b) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<FieldElem>> a(r, std::vector<FieldElem>(c + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j);
    a[i][c] = b[i];
  }
  std::vector<std::size_t> pivot_of_row;
  std::size_t row = 0;
  for (std::size_t j = 0; j < c && row < r; ++j) {
    std::size_t p = r;
    for (std::size_t i = r; i-- > row;)
      if (!a[i][j].is_zero()) p = i;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < r; ++i) {
      if (a[i][j].is_zero()) continue;
      const FieldElem f = a[i][j] / a[row][j];
      for (std::size_t k = j; k <= c; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_of_row.push_back(j);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (!a[i][c].is_zero()) return std::nullopt;
  std::vector<FieldElem> x(c);
  for (std::size_t i = row; i-- > 0;) {
    const std::size_t j = pivot_of_row[i];
    FieldElem s = a[i][c];
    for (std::size_t k = j + 1; k < c; ++k) s -= a[i][k] * x[k];
    x[j] = s / a[i][j];
  }
  return x;
}

inline bool in_span(const ExactVector& v, const std::vector<ExactVector>& basis) {
  if (basis.empty()) return v.is_zero();
  ExactMatrix m(v.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
  return solve(m, v.entries()).has_value();
}

}  // namespace qpascal::oracle
