#pragma once

#include <optional>

#include "resfold/dga.hpp"
#include "resfold/frame.hpp"
#include "resfold/generators.hpp"

namespace resfold {

/// A_3 = C + L: the columns of basis_change are the new basis of A_3, the
/// first q-2 spanning C and the last spanning L.
struct SplittingChoice {
  PolyMatrix basis_change;

  static SplittingChoice identity(RingPtr ring, int rank);
  /// Row vector of eta : A_3 -> L in the original basis.
  PolyMatrix eta() const;
  /// Inclusion C -> A_3.
  PolyMatrix c_inclusion() const;
};

/// B = 0 -> C -> A_2 -> (A_1^* (x) L) + A_1 -> A_2^* (x) L -> C^* (x) L.
/// The frame is H = A_1^* (x) L, H^* = A_1.
SelfDualExample build_B(const FreeComplex& a, const MultiplicationStructure& m, const SplittingChoice& s);

/// Grade of J = I_{q-2}(delta_4); kInfiniteGrade for the unit ideal.
GradeReport grade_J(const FreeComplex& b, const GradeOptions& opt = {});

struct ForwardVerdict {
  SelfDualExample b;
  GradeReport grade_j;
  bool hypothesis = false;  // grade J >= 4
  bool complex_ok = false;
  bool selfdual_ok = false;
  std::optional<AcyclicityVerdict> acyclicity;
  bool acyclic() const { return acyclicity && acyclicity->acyclic; }
};

ForwardVerdict theorem_AB(const FreeComplex& a, const MultiplicationStructure& m, const SplittingChoice& s,
                          const GradeOptions& opt = {});

struct SearchResult {
  SplittingChoice choice;
  int trial = 0;
  GradeReport grade_j;
};

/// Trial 0 is the identity; later trials draw entries from {-3..3} (all of
/// F_p) until invertible. Returns the first trial with grade J >= 4.
std::optional<SearchResult> search_C(const FreeComplex& a, const MultiplicationStructure& m, int budget,
                                     std::uint64_t seed);

}  // namespace resfold
