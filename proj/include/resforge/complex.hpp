#ifndef RESFORGE_COMPLEX_HPP
#define RESFORGE_COMPLEX_HPP

#include "resforge/matrix.hpp"
#include "resforge/registry.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>

namespace resforge {

enum class Family { Dnn1, D4m };
enum class Variant { Split, HilbertBurch };

std::string family_name(Family f);
std::string variant_name(Variant v);

/// Format family tag plus parameter; derives the ranks (1, r1, r2, r3).
struct FormatSpec {
  Family family = Family::Dnn1;
  Variant variant = Variant::Split;
  int param = 4;  // n for dnn1 (even, >= 4), m for d4m (>= 1)

  void validate() const;
  std::array<int, 4> ranks() const;           // (1, r1, r2, r3)
  std::array<int, 3> expected_ranks() const;  // (rank d1, rank d2, rank d3)
};

std::array<int, 3> expected_ranks(const FormatSpec& f);

/// Format-(1,r1,r2,r3) chain complex: d1 (1 x r1), d2 (r1 x r2), d3 (r2 x r3),
/// plus construction metadata (resolved sign conventions, provenance).
struct ChainComplex {
  FormatSpec format;
  std::shared_ptr<const VariableRegistry> registry;
  PolyMatrix d1, d2, d3;
  std::map<std::string, std::string> metadata;

  void check_shapes() const;
};

/// Whether d1*d2 and d2*d3 vanish identically, by exact multiplication.
/// Builder-tagged complexes may go through an algebraically regrouped (still
/// exact) product; anything else is multiplied out directly.
std::pair<bool, bool> compose_check(const ChainComplex& c);

/// Plain expanded-product check, no regrouping.
std::pair<bool, bool> compose_check_expanded(const ChainComplex& c);

}  // namespace resforge

#endif
