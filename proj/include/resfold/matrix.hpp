#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resfold/poly.hpp"

namespace resfold {

using PolyVec = std::vector<Poly>;

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);

  static PolyMatrix identity(RingPtr ring, int n);
  static PolyMatrix from_columns(RingPtr ring, int rows, const std::vector<PolyVec>& columns);
  /// Rows of polynomial strings.
  static PolyMatrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Poly& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Poly& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Poly& operator()(int r, int c) { return at(r, c); }
  const Poly& operator()(int r, int c) const { return at(r, c); }

  PolyVec column(int c) const;
  PolyVec row(int r) const;
  void set_column(int c, const PolyVec& v);

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Scalar& c) const;
  PolyVec apply(const PolyVec& v) const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix columns(int first, int count) const;
  PolyMatrix row_block(int first, int count) const;
  PolyMatrix hstack(const PolyMatrix& o) const;
  PolyMatrix vstack(const PolyMatrix& o) const;

  bool is_zero() const;
  /// First nonzero entry, if any.
  std::optional<std::pair<int, int>> first_nonzero() const;
  bool is_constant() const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  PolyMatrix specialize(const std::map<int, Scalar>& assignment) const;
  PolyMatrix embed(RingPtr target, std::span<const int> var_map) const;

  std::vector<std::vector<std::string>> to_strings() const;

  // Optional basis names and multidegrees; empty when absent.
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::vector<int>> row_degrees, col_degrees;
  /// Every nonzero entry homogeneous of degree col_degree - row_degree.
  /// Returns the first offending entry.
  std::optional<std::pair<int, int>> degree_violation() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

PolyVec operator+(const PolyVec& a, const PolyVec& b);
PolyVec operator-(const PolyVec& a, const PolyVec& b);
PolyVec scale(const PolyVec& v, const Poly& c);
bool is_zero(const PolyVec& v);

/// Dense matrix over the coefficient field (used for specializations).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(Field field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rank() const;
  /// Basis of the right kernel, one vector per free column.
  std::vector<std::vector<Scalar>> kernel() const;
  std::optional<ScalarMatrix> inverse() const;
  Scalar determinant() const;

 private:
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();

  Field field_ = Field::rationals();
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

ScalarMatrix evaluate(const PolyMatrix& m, std::span<const Scalar> point);

}  // namespace resfold
