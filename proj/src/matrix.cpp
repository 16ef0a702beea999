#include "qpascal/matrix.hpp"

#include <utility>

namespace qpascal {

ExactVector::ExactVector(std::size_t n) : entries_(n) {
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "vectors need length >= 1");
}

ExactVector::ExactVector(std::vector<FieldElem> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::ShapeMismatch, "vectors need length >= 1");
}

ExactVector ExactVector::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "unit vector index out of range");
  ExactVector v(n);
  v[i] = FieldElem(1);
  return v;
}

bool ExactVector::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

ExactVector ExactVector::specialize(const CycElem& value) const {
  ExactVector r = *this;
  for (auto& x : r.entries_) x = x.specialize(value);
  return r;
}

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
  ExactVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
  ExactVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

ExactVector operator*(const FieldElem& s, const ExactVector& v) {
  ExactVector r = v;
  for (auto& x : r.entries_) x = s * x;
  return r;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrices need positive dimensions");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<FieldElem>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::ShapeMismatch, "matrices need positive dimensions");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const FieldElem> d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const ExactVector> cols) {
  if (cols.empty()) throw Error(ErrorCode::ShapeMismatch, "no columns");
  ExactMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw Error(ErrorCode::ShapeMismatch, "column lengths differ");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows) {
  if (rows.empty()) throw Error(ErrorCode::ShapeMismatch, "no rows");
  ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "row lengths differ");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactVector ExactMatrix::column(std::size_t j) const {
  if (j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  ExactVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactVector ExactMatrix::row(std::size_t i) const {
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  ExactVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::IndexOutOfRange, "block out of range");
  ExactMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

ExactMatrix ExactMatrix::specialize(const CycElem& value) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x = x.specialize(value);
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_symbolic() const {
  for (const auto& x : data_)
    if (x.is_symbolic()) return true;
  return false;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shapes differ");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference shapes differ");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

ExactMatrix operator*(const FieldElem& s, const ExactMatrix& m) {
  ExactMatrix r = m;
  for (auto& x : r.data_) x = s * x;
  return r;
}

ExactVector operator*(const ExactMatrix& m, const ExactVector& v) {
  if (m.cols_ != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector shapes differ");
  ExactVector r(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    FieldElem acc;
    for (std::size_t j = 0; j < m.cols_; ++j) {
      const FieldElem& a = m(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      acc += a * v[j];
    }
    r[i] = acc;
  }
  return r;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                              std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                                              "x" + std::to_string(b.cols_));
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElem& y = b(k, j);
        if (y.is_zero()) continue;
        r(i, j) += x * y;
      }
    }
  }
  return r;
}

RrefResult rref(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const FieldElem inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElem f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElem(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank() < n || r.pivot_cols[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = FieldElem(1);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) v[r.pivot_cols[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const ExactVector& v, std::span<const ExactVector> basis) {
  if (basis.empty()) return v.is_zero();
  for (const auto& b : basis)
    if (b.size() != v.size()) throw Error(ErrorCode::ShapeMismatch, "in_span length mismatch");
  ExactMatrix a = ExactMatrix::from_columns(basis);
  std::vector<ExactVector> cols(basis.begin(), basis.end());
  cols.push_back(v);
  ExactMatrix aug = ExactMatrix::from_columns(cols);
  return rank(a) == rank(aug);
}

FieldElem determinant(const ExactMatrix& m0) {
  if (!m0.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  ExactMatrix m = m0;
  const std::size_t n = m.rows();
  FieldElem det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return FieldElem();
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const FieldElem inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const FieldElem f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

FieldElem minor(const ExactMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty())
    throw Error(ErrorCode::ShapeMismatch, "minor needs equally many (>= 1) rows and columns");
  auto check = [](std::span<const std::size_t> idx, std::size_t limit) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= limit || (k > 0 && idx[k] <= idx[k - 1]))
        throw Error(ErrorCode::ShapeMismatch, "minor indices must be strictly increasing and in range");
    }
  };
  check(rows, m.rows());
  check(cols, m.cols());
  ExactMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  return determinant(sub);
}

ExactMatrix matrix_power(const ExactMatrix& m, unsigned e) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<std::vector<std::string>> to_string_rows(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

}  // namespace qpascal
