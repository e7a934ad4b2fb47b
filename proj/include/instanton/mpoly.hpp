#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "instanton/matrix.hpp"
#include "instanton/rational.hpp"

namespace instanton {

// Sparse polynomial in the homogeneous coordinates z0, z1, z2, z3.
class MPoly {
 public:
  using Monomial = std::array<int, 4>;

  MPoly() = default;
  static MPoly constant(const Rational& v) {
    MPoly p;
    if (v != 0) p.t_[{0, 0, 0, 0}] = v;
    return p;
  }
  static MPoly var(int i, const Rational& scale = Rational(1)) {
    if (i < 0 || i > 3) throw std::invalid_argument("variable index out of range");
    MPoly p;
    if (scale != 0) {
      Monomial m{0, 0, 0, 0};
      m[i] = 1;
      p.t_[m] = scale;
    }
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
  }
  Rational coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) {
        Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MPoly scaled(const Rational& s) const {
    MPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : t_) r.t_[m] = c * s;
    return r;
  }

  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return t_ != o.t_; }

  Rational eval(const std::array<Rational, 4>& z) const {
    Rational acc = 0;
    for (const auto& [m, c] : t_) {
      Rational term = c;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < m[i]; ++k) term *= z[i];
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    static const char* names[4] = {"z0", "z1", "z2", "z3"};
    std::string out;
    for (const auto& [m, c] : t_) {
      if (!out.empty()) out += (c > 0) ? " + " : " - ";
      else if (c < 0) out += "-";
      const Rational mag = (c < 0) ? Rational(-c) : c;
      const bool is_const = (m[0] | m[1] | m[2] | m[3]) == 0;
      std::string mono;
      for (int i = 0; i < 4; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mag != 1 || is_const) {
        out += format_rational(mag);
        if (!mono.empty()) out += "*";
      }
      out += mono;
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  std::map<Monomial, Rational> t_;
};

// Matrix with polynomial entries (row-major).
struct SymMatrix {
  int rows = 0, cols = 0;
  std::vector<MPoly> e;

  SymMatrix() = default;
  SymMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

  MPoly& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const MPoly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

  bool is_zero() const {
    for (const auto& p : e)
      if (!p.is_zero()) return false;
    return true;
  }

  SymMatrix operator*(const SymMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("symbolic product shape mismatch");
    SymMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const MPoly& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
      }
    return r;
  }

  // Numeric block scaled by a variable: A * z_i, contributed additively.
  void add_block_times_var(const RatMatrix& a, int var, const Rational& scale = Rational(1)) {
    if (a.rows() != rows || a.cols() != cols) throw std::invalid_argument("block shape mismatch");
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (a(i, j) != 0) at(i, j) = at(i, j) + MPoly::var(var, a(i, j) * scale);
  }

  RatMatrix eval(const std::array<Rational, 4>& z) const {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = at(i, j).eval(z);
    return m;
  }
};

// Pencil M0*z0 + M1*z1 (+ optionally 1*z_k) as a symbolic matrix.
inline SymMatrix pencil(const RatMatrix& m0, const RatMatrix& m1, int identity_var = -1) {
  if (m0.rows() != m1.rows() || m0.cols() != m1.cols())
    throw std::invalid_argument("pencil shape mismatch");
  SymMatrix p(m0.rows(), m0.cols());
  p.add_block_times_var(m0, 0);
  p.add_block_times_var(m1, 1);
  if (identity_var >= 0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("identity block in non-square pencil");
    for (int i = 0; i < p.rows; ++i) p.at(i, i) = p.at(i, i) + MPoly::var(identity_var);
  }
  return p;
}

// Characteristic polynomial det(x*Id - M) of a matrix with polynomial
// entries, via the Faddeev-LeVerrier recurrence (only ring operations and
// division by integer scalars).  Returns coefficients of x^0 .. x^n.
inline std::vector<MPoly> char_poly_poly_entries(const SymMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows;
  if (n > 16) throw std::invalid_argument("characteristic polynomial limited to size 16");
  std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
  c[n] = MPoly::constant(Rational(1));
  SymMatrix nmat(n, n);
  for (int i = 0; i < n; ++i) nmat.at(i, i) = MPoly::constant(Rational(1));
  for (int k = 1; k <= n; ++k) {
    SymMatrix mn = m * nmat;
    MPoly tr;
    for (int i = 0; i < n; ++i) tr = tr + mn.at(i, i);
    c[n - k] = tr.scaled(Rational(-1, k));
    if (k < n) {
      nmat = std::move(mn);
      for (int i = 0; i < n; ++i) nmat.at(i, i) = nmat.at(i, i) + c[n - k];
    }
  }
  return c;
}

// Characteristic polynomial of a numeric matrix (same recurrence).
inline std::vector<Rational> char_poly_numeric(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  RatMatrix nmat = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    RatMatrix mn = m * nmat;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += mn(i, i);
    c[n - k] = -tr / k;
    if (k < n) {
      nmat = mn;
      for (int i = 0; i < n; ++i) nmat(i, i) += c[n - k];
    }
  }
  return c;
}

// Determinant of a matrix over an arbitrary commutative ring T (value
// semantics, T() the additive zero).  Cofactor expansion along the first
// remaining row, memoized on the set of available columns; sizes <= 16.
template <class T>
T generic_det(int n, const std::vector<T>& entries) {
  if (n == 0) return T();
  if (n > 16) throw std::invalid_argument("symbolic determinant limited to size 16");
  if (static_cast<int>(entries.size()) != n * n)
    throw std::invalid_argument("symbolic determinant entry count mismatch");
  std::unordered_map<std::uint32_t, T> memo;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  auto popcount = [](std::uint32_t v) {
    int c = 0;
    while (v) {
      v &= v - 1;
      ++c;
    }
    return c;
  };
  // det of the submatrix on rows [n-k, n) and the columns in `mask` (k bits).
  auto rec = [&](auto&& self, std::uint32_t mask) -> const T& {
    const int k = popcount(mask);
    const int row = n - k;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    T acc{};
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const T& a = entries[static_cast<std::size_t>(row) * n + col];
      if (!(a == T{})) {
        if (k == 1) {
          acc = acc + a;
        } else {
          T prod = a * self(self, mask & ~(1u << col));
          if (sign < 0) prod = -prod;
          acc = acc + prod;
        }
      }
      sign = -sign;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return rec(rec, full);
}

inline MPoly sym_det(const SymMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  return generic_det<MPoly>(m.rows, m.e);
}

// Sparse polynomial in a run-time number of variables (used for generic
// combinations of null-space bases).
class MPolyN {
 public:
  MPolyN() = default;
  explicit MPolyN(int nvars) : nvars_(nvars) {}
  static MPolyN constant(int nvars, const Rational& v) {
    MPolyN p(nvars);
    if (v != 0) p.t_[std::vector<int>(nvars, 0)] = v;
    return p;
  }
  static MPolyN var(int nvars, int i, const Rational& scale = Rational(1)) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    MPolyN p(nvars);
    if (scale != 0) {
      std::vector<int> m(nvars, 0);
      m[i] = 1;
      p.t_[m] = scale;
    }
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  int nvars() const { return nvars_; }

  MPolyN operator+(const MPolyN& o) const {
    MPolyN r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  MPolyN operator-() const {
    MPolyN r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  MPolyN operator-(const MPolyN& o) const { return *this + (-o); }
  MPolyN operator*(const MPolyN& o) const {
    MPolyN r(std::max(nvars_, o.nvars_));
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) {
        std::vector<int> m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  bool operator==(const MPolyN& o) const { return t_ == o.t_; }
  bool operator!=(const MPolyN& o) const { return !(*this == o); }

  Rational eval(const std::vector<Rational>& x) const {
    Rational acc = 0;
    for (const auto& [m, c] : t_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) term *= x.at(i);
      acc += term;
    }
    return acc;
  }

 private:
  void add_term(const std::vector<int>& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  int nvars_ = 0;
  std::map<std::vector<int>, Rational> t_;
};

}  // namespace instanton
