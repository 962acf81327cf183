#include "resfold/matrix.hpp"

namespace resfold {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative size");
  data_.assign(static_cast<std::size_t>(rows) * cols, Poly(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, int rows, const std::vector<PolyVec>& columns) {
  PolyMatrix m(std::move(ring), rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) m.set_column(c, columns[c]);
  return m;
}

PolyMatrix PolyMatrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  PolyMatrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Poly::parse(ring, rows[i][j]);
  }
  return m;
}

PolyVec PolyMatrix::column(int c) const {
  PolyVec v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

PolyVec PolyMatrix::row(int r) const {
  return PolyVec(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                 data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

void PolyMatrix::set_column(int c, const PolyVec& v) {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("column length");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch(std::to_string(rows_) + "x" + std::to_string(cols_) + " times " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  PolyMatrix out(ring_ ? ring_ : o.ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  out.row_labels = row_labels;
  out.row_degrees = row_degrees;
  out.col_labels = o.col_labels;
  out.col_degrees = o.col_degrees;
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sum");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("difference");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = -p;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Scalar& c) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.scaled(c);
  return out;
}

PolyVec PolyMatrix::apply(const PolyVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product");
  PolyVec out(rows_, Poly(ring_));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (!at(i, k).is_zero() && !v[k].is_zero()) out[i] += at(i, k) * v[k];
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  out.row_labels = col_labels;
  out.col_labels = row_labels;
  // Dual degrees: the transpose maps duals, degrees negate.
  for (const auto& d : col_degrees) {
    out.row_degrees.push_back(d);
    for (auto& x : out.row_degrees.back()) x = -x;
  }
  for (const auto& d : row_degrees) {
    out.col_degrees.push_back(d);
    for (auto& x : out.col_degrees.back()) x = -x;
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix out(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  for (int r : rows) {
    if (!row_labels.empty()) out.row_labels.push_back(row_labels[r]);
    if (!row_degrees.empty()) out.row_degrees.push_back(row_degrees[r]);
  }
  for (int c : cols) {
    if (!col_labels.empty()) out.col_labels.push_back(col_labels[c]);
    if (!col_degrees.empty()) out.col_degrees.push_back(col_degrees[c]);
  }
  return out;
}

namespace {
std::vector<int> range(int first, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

template <class T>
std::vector<T> concat_or_empty(const std::vector<T>& a, std::size_t na, const std::vector<T>& b, std::size_t nb) {
  if (a.size() != na || b.size() != nb) return {};
  std::vector<T> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}
}  // namespace

PolyMatrix PolyMatrix::columns(int first, int count) const {
  return submatrix(range(0, rows_), range(first, count));
}

PolyMatrix PolyMatrix::row_block(int first, int count) const {
  return submatrix(range(first, count), range(0, cols_));
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hstack");
  PolyMatrix out(ring_ ? ring_ : o.ring_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  out.row_labels = row_labels;
  out.row_degrees = row_degrees;
  out.col_labels = concat_or_empty(col_labels, cols_, o.col_labels, o.cols_);
  out.col_degrees = concat_or_empty(col_degrees, cols_, o.col_degrees, o.cols_);
  return out;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("vstack");
  PolyMatrix out(ring_ ? ring_ : o.ring_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
  out.col_labels = col_labels;
  out.col_degrees = col_degrees;
  out.row_labels = concat_or_empty(row_labels, rows_, o.row_labels, o.rows_);
  out.row_degrees = concat_or_empty(row_degrees, rows_, o.row_degrees, o.rows_);
  return out;
}

bool PolyMatrix::is_zero() const { return !first_nonzero(); }

std::optional<std::pair<int, int>> PolyMatrix::first_nonzero() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::specialize(const std::map<int, Scalar>& assignment) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.specialize(assignment);
  return out;
}

PolyMatrix PolyMatrix::embed(RingPtr target, std::span<const int> var_map) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].embed(target, var_map);
  return out;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

std::optional<std::pair<int, int>> PolyMatrix::degree_violation() const {
  if (row_degrees.empty() || col_degrees.empty()) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Poly& p = at(i, j);
      if (p.is_zero()) continue;
      auto d = p.multidegree();
      if (!d) return std::make_pair(i, j);
      const auto& cd = col_degrees[j];
      const auto& rd = row_degrees[i];
      for (std::size_t k = 0; k < d->size(); ++k)
        if ((*d)[k] != cd[k] - rd[k]) return std::make_pair(i, j);
    }
  return std::nullopt;
}

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  PolyVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  PolyVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

PolyVec scale(const PolyVec& v, const Poly& c) {
  PolyVec out = v;
  for (auto& p : out) p = p * c;
  return out;
}

bool is_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- ScalarMatrix

std::vector<int> ScalarMatrix::rref() {
  const Field& f = field_;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    Scalar inv = f.inv(at(r, c));
    for (int j = c; j < cols_; ++j) at(r, j) = f.mul(at(r, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Scalar factor = at(i, c);
      for (int j = c; j < cols_; ++j)
        if (at(r, j) != 0) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int ScalarMatrix::rank() const {
  ScalarMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
  ScalarMatrix copy = *this;
  auto pivots = copy.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field_.neg(copy.at(static_cast<int>(k), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  ScalarMatrix aug(field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  ScalarMatrix a = *this;
  const Field& f = field_;
  Scalar det = 1;
  int n = rows_;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(c, c));
    Scalar inv = f.inv(a.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Scalar factor = f.mul(a.at(i, c), inv);
      for (int j = c; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(c, j)));
    }
  }
  return det;
}

ScalarMatrix evaluate(const PolyMatrix& m, std::span<const Scalar> point) {
  ScalarMatrix out(m.ring()->field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).evaluate(point);
  return out;
}

}  // namespace resfold
