#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

// Dense matrix over the exact rationals, row-major storage.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  RatMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : r) e_.emplace_back(v);
    }
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }
  static RatMatrix column(const std::vector<Rational>& v) {
    RatMatrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.e_[i] = v[i];
    return m;
  }
  static RatMatrix diagonal(const std::vector<Rational>& v) {
    RatMatrix m(static_cast<int>(v.size()), static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = v[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  RatMatrix operator+(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  RatMatrix operator-(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  RatMatrix operator-() const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rational& b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }
  RatMatrix scaled(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }
  RatMatrix transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<Rational> col(int j) const {
    std::vector<Rational> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  // Stack this above `o` (column counts must match).
  RatMatrix vstack(const RatMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack shape mismatch");
    RatMatrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
  }
  RatMatrix with_column(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("with_column mismatch");
    RatMatrix r(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      r(i, cols_) = v[i];
    }
    return r;
  }

  // Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int sel = -1;
      for (int i = row; i < rows_; ++i)
        if ((*this)(i, col) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      swap_rows(sel, row);
      const Rational inv = Rational(1) / (*this)(row, col);
      for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row) continue;
        const Rational f = (*this)(i, col);
        if (f == 0) continue;
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    RatMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the null space; each vector has length cols().
  std::vector<std::vector<Rational>> kernel() const {
    RatMatrix m = *this;
    const std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rational det() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix m = *this;
    Rational d = 1;
    for (int col = 0; col < cols_; ++col) {
      int sel = -1;
      for (int i = col; i < rows_; ++i)
        if (m(i, col) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return Rational(0);
      if (sel != col) {
        m.swap_rows(sel, col);
        d = -d;
      }
      d *= m(col, col);
      const Rational inv = Rational(1) / m(col, col);
      for (int i = col + 1; i < rows_; ++i) {
        const Rational f = m(i, col) * inv;
        if (f == 0) continue;
        for (int j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }
  bool invertible() const { return is_square() && det() != 0; }

  std::optional<RatMatrix> inverse() const {
    if (!is_square()) return std::nullopt;
    RatMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    const std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    RatMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  // One solution of A x = b, if the system is consistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve shape mismatch");
    RatMatrix aug = with_column(b);
    const std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), cols_);
    return x;
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  int rows_, cols_;
  std::vector<Rational> e_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

inline int mat_rank(const RatMatrix& m) { return m.rank(); }
inline std::vector<std::vector<Rational>> mat_kernel(const RatMatrix& m) { return m.kernel(); }

// Incremental span of a set of vectors, kept in row echelon form.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(int ambient) : ambient_(ambient) {}

  // Returns true when the vector enlarged the span.
  bool insert(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("subspace vector dimension mismatch");
    for (const auto& [lead, row] : rows_) {
      if (v[lead] != 0) {
        const Rational f = v[lead];
        for (int j = 0; j < ambient_; ++j) v[j] -= f * row[j];
      }
    }
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    const Rational inv = Rational(1) / v[lead];
    for (int j = 0; j < ambient_; ++j) v[j] *= inv;
    rows_.emplace_back(lead, std::move(v));
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    SubspaceBasis probe = *this;
    return !probe.insert(std::move(v));
  }

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  std::vector<std::vector<Rational>> vectors() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (const auto& [lead, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  int ambient_;
  std::vector<std::pair<int, std::vector<Rational>>> rows_;
};

}  // namespace instanton
