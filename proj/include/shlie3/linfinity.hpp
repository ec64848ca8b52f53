#pragma once

#include "shlie3/multimap.hpp"
#include "shlie3/report.hpp"

#include <optional>
#include <span>
#include <string>

namespace shlie3 {

// Candidate 3-term L-infinity structure: V = V0+V1+V2 with brackets l1..l4
// of weights -1, 0, 1, 2. Higher brackets are zero by degree.
class LInfinityData {
 public:
  LInfinityData(GradedSpace V, MultiMap l1, MultiMap l2, MultiMap l3, MultiMap l4);
  static LInfinityData zero(const GradedSpace& V);

  const GradedSpace& space() const { return space_; }
  // k = 1..4
  const MultiMap& l(int k) const;
  LInfinityData with(int k, MultiMap m) const;

  friend bool operator==(const LInfinityData&, const LInfinityData&) = default;

 private:
  GradedSpace space_;
  MultiMap l1_, l2_, l3_, l4_;
};

// Left-hand side of the generalized Jacobi identity of order n on homogeneous
// arguments.
GradedVector linfty_residual(const LInfinityData& A, int n, std::span<const GradedVector> args);
GradedVector linfty_residual(const LInfinityData& A, std::span<const BasisIndex> tuple);

struct ConditionReport {
  int n = 0;
  // true when no basis tuple has a residual landing in V0..V2
  bool trivially_empty = false;
  Report report;
  bool passed() const { return report.passed(); }
};

// Exhaustive check over canonical basis tuples. Violations are tagged with the
// degree pattern and the name of the split identity it belongs to.
ConditionReport check_condition(const LInfinityData& A, int n);
std::string condition_tag(int n, std::span<const int> sorted_degrees, bool special);

struct SpecialWitness {
  bool special = true;
  std::string map;                 // "l2" or "l3"
  std::vector<BasisIndex> key;     // a nonzero constant that breaks specialness
};
SpecialWitness is_special(const LInfinityData& A);

// bracket: V0 x V0 -> V0, action: V0 x V2 -> V2, cochain: V0^4 -> V2; V1 must be 0.
LInfinityData from_four_cocycle(const MultiMap& bracket, const MultiMap& action, const MultiMap& cochain);

}  // namespace shlie3
