#pragma once

// Exact dense linear algebra over a field: rank, determinant, pivot
// selection. Everything here backs the torsion computations, so no
// floating point is allowed.

#include <stdexcept>
#include <vector>

namespace coverdet {

template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k) == K(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
    return r;
  }
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }
  bool is_zero() const {
    for (const auto& x : d_)
      if (!(x == K(0))) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<K> r(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  // columns selected by index
  Matrix select_columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols_; ++j)
      for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
  }

  Matrix hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // Gaussian elimination; returns pivot column indices of the echelon form.
  std::vector<int> pivot_columns() const {
    Matrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!(m.at(i, c) == K(0))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
      K inv = K(1) / m.at(r, c);
      for (int j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || m.at(i, c) == K(0)) continue;
        K f = m.at(i, c);
        for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const { return static_cast<int>(pivot_columns().size()); }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
      int p = -1;
      for (int i = c; i < n; ++i)
        if (!(m.at(i, c) == K(0))) {
          p = i;
          break;
        }
      if (p < 0) throw std::domain_error("singular matrix");
      if (p != c)
        for (int j = 0; j < n; ++j) {
          std::swap(m.at(p, j), m.at(c, j));
          std::swap(inv.at(p, j), inv.at(c, j));
        }
      K s = K(1) / m.at(c, c);
      for (int j = 0; j < n; ++j) {
        m.at(c, j) = m.at(c, j) * s;
        inv.at(c, j) = inv.at(c, j) * s;
      }
      for (int i = 0; i < n; ++i) {
        if (i == c || m.at(i, c) == K(0)) continue;
        K f = m.at(i, c);
        for (int j = 0; j < n; ++j) {
          m.at(i, j) -= f * m.at(c, j);
          inv.at(i, j) -= f * inv.at(c, j);
        }
      }
    }
    return inv;
  }

  K det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    Matrix m = *this;
    K d(1);
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i)
        if (!(m.at(i, c) == K(0))) {
          p = i;
          break;
        }
      if (p < 0) return K(0);
      if (p != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
        d = -d;
      }
      d = d * m.at(c, c);
      K inv = K(1) / m.at(c, c);
      for (int i = c + 1; i < rows_; ++i) {
        if (m.at(i, c) == K(0)) continue;
        K f = m.at(i, c) * inv;
        for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return d;
  }

 private:
  int rows_, cols_;
  std::vector<K> d_;
};

}  // namespace coverdet
