#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qpascal/field_elem.hpp"

namespace qpascal {

class ExactVector {
 public:
  explicit ExactVector(std::size_t n);
  explicit ExactVector(std::vector<FieldElem> entries);
  ExactVector(std::initializer_list<FieldElem> entries)
      : ExactVector(std::vector<FieldElem>(entries)) {}

  // e_i of length n (0-based).
  static ExactVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  FieldElem& operator[](std::size_t i) { return entries_[i]; }
  const FieldElem& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<FieldElem>& entries() const { return entries_; }

  bool is_zero() const;
  ExactVector specialize(const CycElem& value) const;

  friend ExactVector operator+(const ExactVector& a, const ExactVector& b);
  friend ExactVector operator-(const ExactVector& a, const ExactVector& b);
  friend ExactVector operator*(const FieldElem& s, const ExactVector& v);
  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExactVector& a, const ExactVector& b) { return !(a == b); }

 private:
  std::vector<FieldElem> entries_;
};

// Dense row-major matrix of exact scalars. Entries of different conductors
// may coexist; arithmetic embeds them into a common field on demand.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<FieldElem>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const FieldElem> d);
  static ExactMatrix from_columns(std::span<const ExactVector> cols);
  static ExactMatrix from_rows(std::span<const ExactVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactVector column(std::size_t j) const;
  ExactVector row(std::size_t i) const;
  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  ExactMatrix specialize(const CycElem& value) const;

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_symbolic() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }
  friend ExactMatrix operator*(const FieldElem& s, const ExactMatrix& m);
  friend ExactVector operator*(const ExactMatrix& m, const ExactVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  friend ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

// Gauss-Jordan inverse. Throws ShapeMismatch (non-square) or SingularMatrix.
ExactMatrix inverse(const ExactMatrix& m);

// Basis of the right null space, one vector per free column of the RREF with
// a 1 in that column. Empty iff m is injective.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

// True iff v is a linear combination of basis (an empty basis spans {0}).
bool in_span(const ExactVector& v, std::span<const ExactVector> basis);

FieldElem determinant(const ExactMatrix& m);

// Determinant of the submatrix on the given strictly increasing row and
// column index sets (0-based).
FieldElem minor(const ExactMatrix& m, std::span<const std::size_t> rows,
                std::span<const std::size_t> cols);

// m^e for e >= 0 (square m).
ExactMatrix matrix_power(const ExactMatrix& m, unsigned e);

// Matrix as nested arrays of canonical element strings.
std::vector<std::vector<std::string>> to_string_rows(const ExactMatrix& m);

}  // namespace qpascal
