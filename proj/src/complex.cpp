#include "resforge/complex.hpp"

#include "resforge/builder_dnn1.hpp"

#include <stdexcept>

namespace resforge {

std::string family_name(Family f) { return f == Family::Dnn1 ? "dnn1" : "d4m"; }
std::string variant_name(Variant v) { return v == Variant::Split ? "split" : "hb"; }

void FormatSpec::validate() const {
  if (family == Family::Dnn1) {
    if (param < 4 || param % 2 != 0)
      throw std::invalid_argument("FormatSpec: dnn1 requires even n >= 4, got n = " + std::to_string(param));
  } else {
    if (param < 1) throw std::invalid_argument("FormatSpec: d4m requires m >= 1, got m = " + std::to_string(param));
  }
}

std::array<int, 4> FormatSpec::ranks() const {
  validate();
  if (family == Family::Dnn1) return {1, param, param, 1};
  return {1, 4, param + 3, param};
}

std::array<int, 3> FormatSpec::expected_ranks() const {
  auto r = ranks();
  // rank additivity for an acyclic length-3 complex with H_0 = R/I:
  // rank d1 = 1, rank d3 = r3, rank d2 = r1 - 1 = r2 - r3
  if (r[1] - 1 != r[2] - r[3]) throw std::logic_error("FormatSpec: rank additivity violated");
  return {1, r[1] - 1, r[3]};
}

std::array<int, 3> expected_ranks(const FormatSpec& f) { return f.expected_ranks(); }

void ChainComplex::check_shapes() const {
  auto r = format.ranks();
  if (d1.rows() != 1 || d1.cols() != r[1] || d2.rows() != r[1] || d2.cols() != r[2] || d3.rows() != r[2] ||
      d3.cols() != r[3])
    throw std::invalid_argument("ChainComplex: differential shapes do not match the format");
}

std::pair<bool, bool> compose_check_expanded(const ChainComplex& c) {
  c.check_shapes();
  return {(c.d1 * c.d2).is_zero(), (c.d2 * c.d3).is_zero()};
}

std::pair<bool, bool> compose_check(const ChainComplex& c) {
  c.check_shapes();
  auto it = c.metadata.find("builder");
  if (it != c.metadata.end() && it->second == "dnn1-hb") {
    if (auto fast = dnn1_detail::compose_witness(c)) return *fast;
  }
  return compose_check_expanded(c);
}

}  // namespace resforge
