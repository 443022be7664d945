#include "resforge/determinantal.hpp"

#include <algorithm>

namespace resforge {

int DetCalc::resolved_t5_ = 3;
int DetCalc::resolved_t6_ = 4;

void DetCalc::set_resolved_P_variant(int t5, int t6) {
  resolved_t5_ = t5;
  resolved_t6_ = t6;
}
std::pair<int, int> DetCalc::resolved_P_variant() { return {resolved_t5_, resolved_t6_}; }

DetCalc DetCalc::dnn1(const VariableRegistry* reg, int n, bool has_x) { return DetCalc(reg, n, 0, has_x); }

DetCalc DetCalc::d4m(const VariableRegistry* reg, int m, bool has_x) { return DetCalc(reg, 0, m, has_x); }

GenericMatrixHandle DetCalc::x_handle() const {
  if (!has_x_) throw std::logic_error("DetCalc: no X matrix in this layout");
  if (n_ > 0) return {reg_, HandleRole::GenericX, n_, n_ - 1};
  return {reg_, HandleRole::GenericX, 4, 3};
}

GenericMatrixHandle DetCalc::b_handle() const {
  if (n_ > 0) return {reg_, HandleRole::SkewB, n_, n_};
  return {reg_, HandleRole::RectB, m_, 6};
}

GenericMatrixHandle DetCalc::c_handle() const {
  if (m_ == 0) throw std::logic_error("DetCalc: dnn1 layout has no c-matrix");
  return {reg_, HandleRole::SkewC, m_, m_};
}

Polynomial DetCalc::x_entry(int i, int j) const {
  return Polynomial::variable(reg_, reg_->x_var(i, j));
}

const Polynomial& DetCalc::signed_maximal_minor(int i) {
  int rows = n_ > 0 ? n_ : 4;
  int cols = rows - 1;
  if (i < 1 || i > rows) throw std::out_of_range("signed_maximal_minor: row index out of range");
  auto it = y_cache_.find(i);
  if (it != y_cache_.end()) return it->second;
  PolyMatrix sub(rows - 1, cols, reg_);
  int r = 0;
  for (int a = 1; a <= rows; ++a) {
    if (a == i) continue;
    for (int c = 1; c <= cols; ++c) sub.set(r, c - 1, x_entry(a, c));
    ++r;
  }
  Polynomial d = determinant(sub);
  if (i % 2 == 0) d = -d;  // (-1)^(i+1)
  return y_cache_.emplace(i, std::move(d)).first->second;
}

const Polynomial& DetCalc::complementary_minor(int i, int j, int k) {
  int rows = n_ > 0 ? n_ : 4;
  int cols = rows - 1;
  if (i >= j) throw std::invalid_argument("complementary_minor: need i < j");
  if (i < 1 || j > rows || k < 1 || k > cols) throw std::out_of_range("complementary_minor: bad indices");
  auto key = std::make_tuple(i, j, k);
  auto it = comp_minor_cache_.find(key);
  if (it != comp_minor_cache_.end()) return it->second;
  PolyMatrix sub(rows - 2, cols - 1, reg_);
  int r = 0;
  for (int a = 1; a <= rows; ++a) {
    if (a == i || a == j) continue;
    int cc = 0;
    for (int c = 1; c <= cols; ++c) {
      if (c == k) continue;
      sub.set(r, cc++, x_entry(a, c));
    }
    ++r;
  }
  return comp_minor_cache_.emplace(key, determinant(sub)).first->second;
}

const Polynomial& DetCalc::row_pair_minor(int i, int j, int k) {
  if (n_ != 0 || !has_x_) throw std::logic_error("row_pair_minor: needs the 4x3 layout");
  if (i > j) std::swap(i, j);
  // keeping rows {i,j} of a 4-row matrix = deleting the complementary pair
  int di = 0, dj = 0;
  for (int a = 1; a <= 4; ++a) {
    if (a == i || a == j) continue;
    if (di == 0)
      di = a;
    else
      dj = a;
  }
  return complementary_minor(di, dj, k);
}

Polynomial DetCalc::pf_compute(std::uint32_t mask, bool c_matrix) {
  // first-index expansion over the kept set (1-based indices in bits 1..)
  if (mask == 0) return Polynomial::constant(reg_, 1);
  int first = __builtin_ctz(mask);
  std::uint32_t rest = mask & ~(1u << first);
  PolyAccumulator acc(reg_);
  int sign = 1;
  int limit = c_matrix ? m_ : n_;
  for (int j = first + 1; j <= limit; ++j) {
    if (!(rest & (1u << j))) continue;
    SignedVar sv = c_matrix ? reg_->c_var(first, j) : reg_->b_var(first, j);
    if (sv.sign != 0) {
      const Polynomial& sub = c_matrix ? gamma_cached(rest & ~(1u << j)) : pf_cached(rest & ~(1u << j));
      acc.add_scaled(Monomial::variable(sv.index), Rational(sign * sv.sign), sub);
    }
    sign = -sign;
  }
  return acc.take();
}

const Polynomial& DetCalc::pf_cached(std::uint32_t mask) {
  auto it = pf_cache_.find(mask);
  if (it != pf_cache_.end()) return it->second;
  if (__builtin_popcount(mask) % 2 != 0) throw std::invalid_argument("sub_pfaffian: odd index set");
  Polynomial p = pf_compute(mask, false);
  return pf_cache_.emplace(mask, std::move(p)).first->second;
}

const Polynomial& DetCalc::gamma_cached(std::uint32_t mask) {
  auto it = gamma_cache_.find(mask);
  if (it != gamma_cache_.end()) return it->second;
  if (__builtin_popcount(mask) % 2 != 0) throw std::invalid_argument("gamma_pfaffian: odd index set");
  Polynomial p = pf_compute(mask, true);
  return gamma_cache_.emplace(mask, std::move(p)).first->second;
}

namespace {
std::uint32_t mask_of(const std::vector<int>& idx, int limit, const char* what) {
  std::uint32_t m = 0;
  for (int i : idx) {
    if (i < 1 || i > limit) throw std::out_of_range(std::string(what) + ": index out of range");
    if (m & (1u << i)) throw std::invalid_argument(std::string(what) + ": duplicate index");
    m |= 1u << i;
  }
  return m;
}
std::uint32_t full_mask(int limit) {
  std::uint32_t m = 0;
  for (int i = 1; i <= limit; ++i) m |= 1u << i;
  return m;
}
}  // namespace

const Polynomial& DetCalc::sub_pfaffian_keep(const std::vector<int>& kept) {
  if (n_ == 0) throw std::logic_error("sub_pfaffian: dnn1 layout only");
  return pf_cached(mask_of(kept, n_, "sub_pfaffian"));
}

const Polynomial& DetCalc::sub_pfaffian_remove(const std::vector<int>& removed) {
  if (n_ == 0) throw std::logic_error("sub_pfaffian: dnn1 layout only");
  return pf_cached(full_mask(n_) & ~mask_of(removed, n_, "sub_pfaffian"));
}

const Polynomial& DetCalc::full_pfaffian() {
  if (n_ == 0) throw std::logic_error("full_pfaffian: dnn1 layout only");
  return pf_cached(full_mask(n_));
}

Polynomial DetCalc::b_minor(const std::vector<std::pair<int, int>>& row_pairs, const std::vector<int>& cols) {
  if (m_ == 0) throw std::logic_error("b_minor: d4m layout only");
  if (row_pairs.size() != cols.size()) throw std::invalid_argument("b_minor: pair/column count mismatch");
  std::size_t r = row_pairs.size();
  if (r > static_cast<std::size_t>(m_)) throw std::invalid_argument("b_minor: size exceeds m");

  // normalize to a canonical key, tracking the alternating sign
  int sign = 1;
  std::vector<int> slots;
  for (auto [i, j] : row_pairs) {
    if (i > j) {
      std::swap(i, j);
      sign = -sign;  // b(j,i) = -b(i,j) on a full row of the minor
    }
    slots.push_back(pair_slot(i, j));
  }
  std::vector<int> ks = cols;
  for (int k : ks)
    if (k < 1 || k > m_) throw std::out_of_range("b_minor: column index out of range");
  auto sort_sign = [](std::vector<int>& v) {
    int s = 1;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        if (v[a] > v[b]) {
          std::swap(v[a], v[b]);
          s = -s;
        }
    return s;
  };
  sign *= sort_sign(slots);
  sign *= sort_sign(ks);
  for (std::size_t a = 1; a < slots.size(); ++a)
    if (slots[a] == slots[a - 1]) throw std::invalid_argument("b_minor: duplicate row pair");
  for (std::size_t a = 1; a < ks.size(); ++a)
    if (ks[a] == ks[a - 1]) throw std::invalid_argument("b_minor: duplicate column");

  std::uint64_t key_pairs = 0, key_cols = 0;
  for (int s : slots) key_pairs = key_pairs * 8 + static_cast<std::uint64_t>(s + 1);
  for (int k : ks) key_cols = key_cols * 64 + static_cast<std::uint64_t>(k);
  auto key = std::make_tuple(key_pairs, key_cols);
  auto it = bminor_cache_.find(key);
  if (it == bminor_cache_.end()) {
    PolyMatrix sub(static_cast<int>(r), static_cast<int>(r), reg_);
    for (std::size_t a = 0; a < r; ++a) {
      auto [pi, pj] = kPairOrder[slots[a]];
      for (std::size_t b = 0; b < r; ++b)
        sub.set(static_cast<int>(a), static_cast<int>(b),
                Polynomial::signed_variable(reg_, reg_->b_var(pi, pj, ks[b])));
    }
    it = bminor_cache_.emplace(key, determinant(sub)).first;
  }
  return sign < 0 ? -it->second : it->second;
}

Polynomial DetCalc::mixed_pfaffian_P(int u, int t, int t5, int t6) {
  if (m_ == 0) throw std::logic_error("mixed_pfaffian_P: d4m layout only");
  if (u < 1 || u > m_ || t < 1 || t > m_) throw std::out_of_range("mixed_pfaffian_P: index out of range");
  if ((t5 != 3 && t5 != 4) || (t6 != 3 && t6 != 4))
    throw std::invalid_argument("mixed_pfaffian_P: variant selectors must be 3 or 4");
  auto bv = [&](int i, int j, int k) { return Polynomial::signed_variable(reg_, reg_->b_var(i, j, k)); };
  Polynomial s = bv(1, 2, u) * bv(3, 4, t) - bv(1, 3, u) * bv(2, 4, t) + bv(1, 4, u) * bv(2, 3, t) +
                 bv(3, 4, u) * bv(1, 2, t) - bv(2, 4, u) * bv(1, t5, t) + bv(2, 3, u) * bv(1, t6, t);
  return s * Rational(1, 2);
}

Polynomial DetCalc::mixed_pfaffian_L(int s, int t) {
  if (m_ == 0) throw std::logic_error("mixed_pfaffian_L: d4m layout only");
  if (s < 1 || s > m_ || t < 1 || t > m_) throw std::out_of_range("mixed_pfaffian_L: index out of range");
  auto bv = [&](int i, int j, int k) { return Polynomial::signed_variable(reg_, reg_->b_var(i, j, k)); };
  return bv(1, 2, s) * bv(3, 4, t) - bv(1, 3, s) * bv(2, 4, t) + bv(2, 3, s) * bv(1, 4, t);
}

const Polynomial& DetCalc::gamma_keep(const std::vector<int>& kept) {
  if (m_ == 0) throw std::logic_error("gamma_pfaffian: d4m layout only");
  return gamma_cached(mask_of(kept, m_, "gamma_pfaffian"));
}

const Polynomial& DetCalc::gamma_remove(const std::vector<int>& removed) {
  if (m_ == 0) throw std::logic_error("gamma_pfaffian: d4m layout only");
  return gamma_cached(full_mask(m_) & ~mask_of(removed, m_, "gamma_pfaffian"));
}

const Polynomial& DetCalc::gamma_full() {
  if (m_ == 0) throw std::logic_error("gamma_pfaffian: d4m layout only");
  return gamma_cached(full_mask(m_));
}

}  // namespace resforge
