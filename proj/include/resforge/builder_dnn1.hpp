#ifndef RESFORGE_BUILDER_DNN1_HPP
#define RESFORGE_BUILDER_DNN1_HPP

#include "resforge/complex.hpp"

#include <optional>

namespace resforge {

/// F^top of format (1,n,n,1) from the split exact complex: d1/d3 entries are
/// signed sub-pfaffians of the generic skew b-matrix, d2 the bordered skew
/// block. Requires n even, n >= 4.
ChainComplex build_split_dnn1(int n);

/// F^top of format (1,n,n,1) from the Hilbert-Burch complex: d1 entries
/// u_i = sum_j (-1)^(i+j) sgn(j-i) Y_j P_{i^,j^}, d2(i,h) = -sum_j X(j,h) b(j,i)
/// with Y_i in the last column, d3 rows (-1)^k sum_{i<j} X_{k^}^{i^,j^} P_{i^,j^}
/// over P. The residual sign conventions are fixed by composition-zero and
/// recorded in metadata.
ChainComplex build_hb_dnn1(int n);

namespace dnn1_detail {

/// Exact composition check for the Hilbert-Burch dnn1 complex using the
/// factored structure of its entries (atom-level cancellation plus regrouped
/// products). Returns nullopt when the stored matrices do not match their
/// factored reconstruction, in which case the caller falls back to the
/// expanded product.
std::optional<std::pair<bool, bool>> compose_witness(const ChainComplex& c);

}  // namespace dnn1_detail

}  // namespace resforge

#endif
