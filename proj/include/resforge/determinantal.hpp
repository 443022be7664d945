#ifndef RESFORGE_DETERMINANTAL_HPP
#define RESFORGE_DETERMINANTAL_HPP

#include "resforge/matrix.hpp"
#include "resforge/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace resforge {

/// Shape/role descriptor for the generic matrices whose minors and pfaffians
/// the paperwork is expressed in.
enum class HandleRole {
  GenericX,  // n x (n-1) or 4 x 3 matrix of X(i,j) variables
  SkewB,     // n x n skew matrix of b(i,j)
  RectB,     // m x 6 matrix of b(i,j)^k, columns = pairs (12,13,14,23,24,34)
  SkewC,     // m x m skew matrix of c(u,t)
};

struct GenericMatrixHandle {
  const VariableRegistry* reg = nullptr;
  HandleRole role = HandleRole::GenericX;
  int rows = 0, cols = 0;
};

/// Named generators from the construction: signed maximal minors Y_i,
/// complementary minors, sub-pfaffians of the b-matrix, B-minors, mixed
/// pfaffians P_{u,t} / L_{s,t} and Gamma-pfaffians of the c-matrix.
/// Everything is computed lazily and cached per index set.
class DetCalc {
 public:
  /// dnn1 layout: X is n x (n-1) (absent for the split variant), B is the
  /// n x n skew matrix on b(i,j).
  static DetCalc dnn1(const VariableRegistry* reg, int n, bool has_x);

  /// d4m layout: X is 4 x 3 (absent for split), B is m x 6 on b(i,j)^k,
  /// C is the m x m skew matrix on c(u,t).
  static DetCalc d4m(const VariableRegistry* reg, int m, bool has_x);

  const VariableRegistry* registry() const { return reg_; }
  int n() const { return n_; }
  int m() const { return m_; }
  bool has_x() const { return has_x_; }

  GenericMatrixHandle x_handle() const;
  GenericMatrixHandle b_handle() const;
  GenericMatrixHandle c_handle() const;

  Polynomial x_entry(int i, int j) const;  // 1-based

  /// Y_i = (-1)^(i+1) det(X with row i deleted).
  const Polynomial& signed_maximal_minor(int i);

  /// X_{k-hat}^{i-hat,j-hat}: delete rows i < j and column k.
  const Polynomial& complementary_minor(int i, int j, int k);

  /// X_{k-hat}^{i,j} for the 4x3 matrix: keep only rows i < j, delete column k.
  const Polynomial& row_pair_minor(int i, int j, int k);

  /// Pfaffian of the skew b-matrix restricted to `kept` (dnn1 family).
  const Polynomial& sub_pfaffian_keep(const std::vector<int>& kept);
  const Polynomial& sub_pfaffian_remove(const std::vector<int>& removed);
  const Polynomial& full_pfaffian();  // P

  /// B-minor with ordered row pairs and columns; alternating in swaps.
  Polynomial b_minor(const std::vector<std::pair<int, int>>& row_pairs, const std::vector<int>& cols);

  /// Mixed pfaffian P_{u,t} of Definition-2.4 type. The two doubtful factor
  /// pairs are selectable: `t5` and `t6` pick the second factor of terms 5
  /// and 6 as the column pair (1,t5) / (1,t6), i.e. 3 or 4.
  Polynomial mixed_pfaffian_P(int u, int t, int t5, int t6);
  /// Resolved form (t5 = 3, t6 = 4), fixed by the composition-zero search.
  Polynomial mixed_pfaffian_P(int u, int t) { return mixed_pfaffian_P(u, t, resolved_t5_, resolved_t6_); }

  /// L_{s,t} = b12^s b34^t - b13^s b24^t + b23^s b14^t.
  Polynomial mixed_pfaffian_L(int s, int t);

  /// Pfaffian of the c-matrix on the retained index set.
  const Polynomial& gamma_keep(const std::vector<int>& kept);
  const Polynomial& gamma_remove(const std::vector<int>& removed);
  const Polynomial& gamma_full();

  static void set_resolved_P_variant(int t5, int t6);
  static std::pair<int, int> resolved_P_variant();

 private:
  DetCalc(const VariableRegistry* reg, int n, int m, bool has_x) : reg_(reg), n_(n), m_(m), has_x_(has_x) {}

  const Polynomial& pf_cached(std::uint32_t kept_mask);     // b-matrix pfaffians
  const Polynomial& gamma_cached(std::uint32_t kept_mask);  // c-matrix pfaffians
  Polynomial pf_compute(std::uint32_t mask, bool c_matrix);

  const VariableRegistry* reg_;
  int n_;  // dnn1 size (0 for d4m); X rows when present
  int m_;  // d4m defect count (0 for dnn1)
  bool has_x_;

  std::map<int, Polynomial> y_cache_;
  std::map<std::tuple<int, int, int>, Polynomial> comp_minor_cache_;
  std::map<std::uint32_t, Polynomial> pf_cache_;
  std::map<std::uint32_t, Polynomial> gamma_cache_;
  std::map<std::tuple<std::uint64_t, std::uint64_t>, Polynomial> bminor_cache_;

  static int resolved_t5_, resolved_t6_;
};

/// Canonical order of the six unordered pairs of {1,2,3,4}: fixes the row
/// ordering of the m x 6 matrix B.
inline constexpr std::pair<int, int> kPairOrder[6] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

inline int pair_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int s = 0; s < 6; ++s)
    if (kPairOrder[s].first == i && kPairOrder[s].second == j) return s;
  throw std::invalid_argument("pair_slot: bad pair");
}

}  // namespace resforge

#endif
