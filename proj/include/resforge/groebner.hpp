#ifndef RESFORGE_GROEBNER_HPP
#define RESFORGE_GROEBNER_HPP

#include "resforge/polynomial.hpp"

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

namespace resforge {

struct GroebnerBudget {
  std::size_t max_pairs = 20000;   // S-pairs processed
  std::size_t max_basis = 300;     // basis elements
  std::uint32_t max_degree = 60;   // lcm degree of a processed pair
  std::int64_t wall_ms = 60000;    // wall-clock cap
};

enum class GbStatus { Complete, Capped };

struct GroebnerBasis {
  std::vector<Polynomial> gens;  // reduced basis when status == Complete
  MonomialOrder order;
  bool reduced = false;
  GbStatus status = GbStatus::Complete;
  std::string cap_reason;  // set when status == Capped
};

/// Buchberger with sugar-degree pair selection and the coprimality / chain
/// criteria. On completion the basis is reduced (monic, interreduced) and
/// post-verified: every S-polynomial reduces to zero. Exceeding the budget
/// yields status Capped with the partial generator list, never a silently
/// wrong basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order,
                         const GroebnerBudget& budget = {});

/// Full remainder of p modulo the generators: no term of the result is
/// divisible by any leading term. Zero iff p lies in the ideal whenever the
/// generators form a Groebner basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Sentinel codimension of the unit ideal: exceeds any finite target.
inline constexpr int kInfiniteCodim = INT_MAX;

/// Codimension (= #variables - Krull dimension) of the ideal, computed from
/// the leading-term ideal: the minimum number of variables meeting every
/// leading-term support. Equals grade over a field-coefficient polynomial
/// ring. Requires a completed Groebner basis.
int ideal_codim(const GroebnerBasis& gb);

}  // namespace resforge

#endif
