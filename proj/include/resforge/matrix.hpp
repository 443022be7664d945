#ifndef RESFORGE_MATRIX_HPP
#define RESFORGE_MATRIX_HPP

#include "resforge/polynomial.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace resforge {

/// Dense rectangular matrix of Polynomials over one registry. Row/column
/// basis labels are optional bookkeeping (e_i, f_h, g_k).
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), reg_(nullptr) {}
  PolyMatrix(int rows, int cols, const VariableRegistry* reg)
      : rows_(rows), cols_(cols), reg_(reg), grid_(static_cast<std::size_t>(rows) * cols, Polynomial(reg)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const VariableRegistry* registry() const { return reg_; }

  Polynomial& at(int r, int c) { return grid_.at(index(r, c)); }
  const Polynomial& at(int r, int c) const { return grid_.at(index(r, c)); }

  void set(int r, int c, Polynomial p) {
    if (p.registry() && p.registry() != reg_) throw std::invalid_argument("PolyMatrix: registry mismatch");
    grid_.at(index(r, c)) = std::move(p);
  }

  std::vector<std::string> row_labels, col_labels;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.grid_ == b.grid_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix r(a.rows_, b.cols_, a.reg_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        PolyAccumulator acc(a.reg_);
        for (int k = 0; k < a.cols_; ++k) acc.add_product(a.at(i, k), b.at(k, j));
        r.at(i, j) = acc.take();
      }
    return r;
  }

  bool is_zero() const {
    for (const Polynomial& p : grid_)
      if (!p.is_zero()) return false;
    return true;
  }

  PolyMatrix submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
    PolyMatrix r(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()), reg_);
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
      for (std::size_t j = 0; j < keep_cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(keep_rows[i], keep_cols[j]);
    return r;
  }

  bool all_constant() const {
    for (const Polynomial& p : grid_)
      if (!p.is_constant()) return false;
    return true;
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_, cols_;
  const VariableRegistry* reg_;
  std::vector<Polynomial> grid_;
};

namespace detail {

/// Cofactor expansion along the first remaining row, memoized on the column
/// subset (the row set is determined by how many columns remain).
inline Polynomial det_cofactor(const PolyMatrix& m, std::uint32_t colmask, int row,
                               std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (colmask == 0) return Polynomial::constant(m.registry(), 1);
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  PolyAccumulator acc(m.registry());
  int sign = 1;
  for (int c = 0; c < m.cols(); ++c) {
    if (!(colmask & (1u << c))) continue;
    const Polynomial& e = m.at(row, c);
    if (!e.is_zero()) {
      Polynomial sub = det_cofactor(m, colmask & ~(1u << c), row + 1, memo);
      if (sign < 0) sub = -sub;
      acc.add_product(e, sub);
    }
    sign = -sign;
  }
  Polynomial r = acc.take();
  memo.emplace(colmask, r);
  return r;
}

/// Exact determinant of a constant matrix via Gaussian elimination.
inline Rational det_constant(const PolyMatrix& m) {
  int n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).constant_value();
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det.negate();
    }
    det *= a[col][col];
    Rational inv = Rational(1) / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Rational f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace detail

/// Exact determinant. Constant matrices go through fraction-free elimination;
/// symbolic ones through memoized cofactor expansion over column subsets.
inline Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square input");
  if (m.rows() == 0) return Polynomial::constant(m.registry(), 1);
  if (m.rows() > 30) throw std::invalid_argument("determinant: size cap exceeded");
  if (m.all_constant()) return Polynomial::constant(m.registry(), detail::det_constant(m));
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::uint32_t full = (m.cols() >= 32) ? 0xffffffffu : ((1u << m.cols()) - 1);
  return detail::det_cofactor(m, full, 0, memo);
}

inline bool is_skew_symmetric(const PolyMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  }
  return true;
}

namespace detail {

inline Polynomial pfaffian_memo(const PolyMatrix& m, std::uint32_t mask,
                                std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (mask == 0) return Polynomial::constant(m.registry(), 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int first = __builtin_ctz(mask);
  std::uint32_t rest = mask & ~(1u << first);
  PolyAccumulator acc(m.registry());
  int sign = 1;
  for (int j = first + 1; j < m.rows(); ++j) {
    if (!(rest & (1u << j))) continue;
    const Polynomial& e = m.at(first, j);
    if (!e.is_zero()) {
      Polynomial sub = pfaffian_memo(m, rest & ~(1u << j), memo);
      if (sign < 0) sub = -sub;
      acc.add_product(e, sub);
    }
    sign = -sign;
  }
  Polynomial r = acc.take();
  memo.emplace(mask, r);
  return r;
}

}  // namespace detail

/// Exact pfaffian via first-row expansion with sub-pfaffian memoization.
/// Requires an even-dimensional skew-symmetric matrix.
inline Polynomial pfaffian(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: non-square input");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (!is_skew_symmetric(m)) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (m.rows() == 0) return Polynomial::constant(m.registry(), 1);
  std::unordered_map<std::uint32_t, Polynomial> memo;
  return detail::pfaffian_memo(m, (1u << m.rows()) - 1, memo);
}

}  // namespace resforge

#endif
