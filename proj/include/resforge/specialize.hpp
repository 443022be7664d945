#ifndef RESFORGE_SPECIALIZE_HPP
#define RESFORGE_SPECIALIZE_HPP

#include "resforge/complex.hpp"
#include "resforge/exactness.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace resforge {

struct SpecializeResult {
  ChainComplex complex;
  std::vector<Polynomial> ideal;  // the specialized d1 entries
};

enum class TriState { True, False, Indeterminate };
std::string tristate_name(TriState t);

/// Specialize the generic (1,n,n,1) Hilbert-Burch complex to an n x (n-1)
/// matrix M over a registry containing an unused variable named "Z":
/// X -> M, b(k,r) -> +-Z, one defect variable per partition pair -> 1, the
/// rest -> 0. Resolves the ideal (f_k, f_r) + Z*(f_i, i != k,r) where
/// f_i = Y_i(M). The default partition pairs the remaining indices in
/// increasing adjacent order; an explicit partition may be supplied.
SpecializeResult specialize_thm71(const PolyMatrix& M, int k, int r,
                                  const std::vector<std::pair<int, int>>* partition = nullptr);

/// Depth condition: grade of the submaximal-minor ideal
/// (M_{1^}^{k^,r^}, ..., M_{n-1^}^{k^,r^}) is at least 2.
TriState minimality_check_thm71(const PolyMatrix& M, int k, int r, const ExactnessBudget& budget);

/// Specialize the generic (1,4,5,2) Hilbert-Burch complex to a 4 x 3 matrix
/// M over a registry containing unused variables "Z1", "Z2":
/// b(1,2)^1 -> Z1, b(3,4)^1 -> 1, b(1,3)^2 -> Z2, b(2,4)^2 -> 1, other
/// defect variables -> 0. Resolves (Z1 Z2 f4, Z1 f3, Z2 f2, f1).
SpecializeResult specialize_thm72(const PolyMatrix& M);

/// Both 2x2-minor families (rows {2,4} and rows {3,4} against each column
/// deletion) nonzero, and at least one of grade >= 2.
TriState minimality_check_thm72(const PolyMatrix& M, const ExactnessBudget& budget);

}  // namespace resforge

#endif
