#ifndef RESFORGE_BUILDER_D4M_HPP
#define RESFORGE_BUILDER_D4M_HPP

#include "resforge/complex.hpp"

#include <stdexcept>
#include <string>

namespace resforge {

/// Raised when the composition-zero disambiguation search finds zero or more
/// than one inequivalent sign convention (CLI exit code 3).
class SignResolutionError : public std::runtime_error {
 public:
  explicit SignResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of the disambiguation search over the formula ambiguity set (the
/// doubtful mixed-pfaffian factor pairs and residual family signs): counts of
/// candidates, survivors of composition-zero at the probe sizes, and the
/// number of survivor classes up to diagonal basis flips.
struct SignResolutionReport {
  int candidates = 0;
  int survivors = 0;
  int classes = 0;
  std::string resolved;  // human-readable description of the chosen convention
};

/// F^top of format (1,4,m+3,m) from the split exact complex. m >= 2; the
/// m = 2 case reproduces the worked small-case matrices exactly.
ChainComplex build_split_d4m(int m);

/// F^top of format (1,4,m+3,m) from the Hilbert-Burch complex. m >= 2;
/// m in {2,3} is an extrapolation below the theorem's stated range and is
/// flagged in metadata (still required to pass composition-zero).
ChainComplex build_hb_d4m(int m);

/// Runs (or returns the cached result of) the sign-resolution searches for
/// both d4m variants. Throws SignResolutionError unless exactly one
/// equivalence class survives per variant.
const SignResolutionReport& d4m_split_sign_report();
const SignResolutionReport& d4m_hb_sign_report();

}  // namespace resforge

#endif
