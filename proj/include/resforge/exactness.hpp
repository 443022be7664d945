#ifndef RESFORGE_EXACTNESS_HPP
#define RESFORGE_EXACTNESS_HPP

#include "resforge/complex.hpp"
#include "resforge/groebner.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace resforge {

enum class MethodTag { Certified, Probabilistic, Skipped };
std::string method_tag_name(MethodTag t);

struct RankResult {
  int rank = 0;
  MethodTag tag = MethodTag::Skipped;
};

struct GradeResult {
  int bound = 0;              // certified or probabilistic lower bound
  bool unbounded = false;     // unit ideal: exceeds any target
  MethodTag tag = MethodTag::Skipped;

  bool meets(int target) const { return unbounded || bound >= target; }
};

enum class Verdict { AcyclicCertified, AcyclicProbable, Indeterminate, Failed };
std::string verdict_name(Verdict v);

struct ExactnessBudget {
  int rank_points = 3;                    // independent random evaluations
  long long eval_range = 10000;           // entries drawn from [-range, range]
  std::uint64_t seed = 814502;            // fixed default for reproducibility
  std::size_t certified_minor_cap = 512;  // symbolic minors before downgrade
  GroebnerBudget groebner;
  std::size_t grade_keep_vars = 12;       // probabilistic fallback keeps this many
  bool skip_grade = false;
  bool skip_rank = false;
};

/// Per-complex verdicts for the Buchsbaum-Eisenbud criterion, every
/// ingredient tagged certified / probabilistic / skipped.
struct ExactnessReport {
  std::pair<bool, bool> compose_ok{false, false};
  std::array<int, 3> expected{};          // expected ranks (1, r1-1, r3)
  std::array<RankResult, 3> ranks{};
  std::array<GradeResult, 3> grades{};    // grade targets 1, 2, 3
  Verdict verdict = Verdict::Indeterminate;
  std::uint64_t seed = 0;
  std::string notes;
};

/// Rank of a polynomial matrix. Probabilistic mode evaluates all variables at
/// independent random integers (exact rational rank, repeated; the result is
/// a sound lower bound). Certified mode additionally verifies that all
/// (r+1)-minors vanish identically; if the symbolic workload exceeds the cap
/// the tag downgrades to probabilistic.
RankResult matrix_rank(const PolyMatrix& m, bool certified, const ExactnessBudget& budget);

/// All r x r minors, deduplicated and sign-normalized (zero minors dropped).
std::vector<Polynomial> minors_ideal(const PolyMatrix& m, int r);

/// Lower bound for the grade of the ideal generated by `gens`, targeting
/// `target`. Certified = Groebner codimension within budget; probabilistic =
/// codimension after random integer specialization of excess variables;
/// otherwise skipped. Over a field-coefficient polynomial ring grade equals
/// height equals codimension, which is what is computed.
GradeResult grade_lower_bound(const std::vector<Polynomial>& gens, int target, const ExactnessBudget& budget);

/// Assembles composition, rank and grade checks into the acyclicity verdict
/// per the decision table:
///   failed            any composition false, any computed rank != expected,
///                     or a certified grade below target
///   indeterminate     nothing failed but some check skipped or a
///                     probabilistic grade missed its target
///   acyclic-certified everything certified and passing
///   acyclic-probable  everything passing, some ingredient probabilistic
ExactnessReport buchsbaum_eisenbud_report(const ChainComplex& c, const ExactnessBudget& budget);

}  // namespace resforge

#endif
