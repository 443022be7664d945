#ifndef RESFORGE_JSON_IO_HPP
#define RESFORGE_JSON_IO_HPP

#include "resforge/complex.hpp"
#include "resforge/exactness.hpp"

#include <memory>
#include <string>

namespace resforge {

inline constexpr const char* kToolVersion = "resforge 0.1.0";

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic complex file: header {format, variant, parameters,
/// sign-conventions, tool-version}, ordered variable list, polynomials as
/// arrays of [numerator, denominator, [[var-index, exponent], ...]] terms,
/// matrices row-major. Byte-identical across runs for equal inputs.
std::string complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const std::string& text);

void save_complex(const ChainComplex& c, const std::string& path);
ChainComplex load_complex(const std::string& path);

/// Verification report as JSON (includes the seed used by probabilistic
/// checks so reruns are reproducible).
std::string report_to_json(const ExactnessReport& r, const std::pair<bool, bool>* compose,
                           bool rank_requested, bool grade_requested);

/// Matrix input for the specialize command: {"variables": [names...],
/// "rows": [[expr, ...], ...]} with entries as polynomial expressions.
struct OwnedMatrix {
  std::shared_ptr<const VariableRegistry> registry;
  PolyMatrix matrix;
};
OwnedMatrix load_matrix(const std::string& path);

}  // namespace resforge

#endif
