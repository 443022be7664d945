#ifndef RESFORGE_EXPORT_FMT_HPP
#define RESFORGE_EXPORT_FMT_HPP

#include "resforge/complex.hpp"

#include <string>

namespace resforge {

enum class ExportTarget { M2, Singular, Latex };

/// Self-contained script declaring the ring and the three differentials,
/// suitable for re-checking the complex in an external system. The M2 and
/// Singular scripts include the expected-rank comment block; the LaTeX
/// target emits pmatrix blocks.
std::string export_complex(const ChainComplex& c, ExportTarget target);

/// Export-safe variable name (alphanumeric only), deterministic and
/// collision-checked per registry.
std::string export_var_name(const VariableRegistry& reg, int var);

}  // namespace resforge

#endif
