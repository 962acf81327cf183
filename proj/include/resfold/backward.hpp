#pragma once

#include "resfold/generators.hpp"
#include "resfold/spinor.hpp"

namespace resfold {

/// 0 -> B_0^* + R -> B_1^* -> H^* -> R with d_3 = [delta_4 | w(1)],
/// d_2 the dual of delta_2 restricted to H, d_1 = lambda on H^*.
FreeComplex build_A(const FreeComplex& b, const HyperbolicFrame& frame, const SpinorVector& lambda, const PolyMatrix& w);

struct GradeIVerdict {
  GradeReport direct;                 // grade of the entries of d_1
  std::optional<GradeReport> via_d2;  // grade of I_{n-1}(d_2), when consulted
  bool hypothesis = false;            // grade I >= 3
  std::optional<AcyclicityVerdict> acyclicity;
  bool acyclic() const { return acyclicity && acyclicity->acyclic; }
};

/// Grade of I = I_1(d_1); falls back on I_{n-1}(d_2), which has the same
/// radical when B is acyclic. Runs be_acyclicity once grade I >= 3.
GradeIVerdict certify_grade_I(const FreeComplex& a, bool use_d2 = true, const GradeOptions& opt = {});

struct BackwardResult {
  HyperbolicFrame frame;
  SpinorVector lambda;
  PolyMatrix w;
  FreeComplex a;
};

BackwardResult theorem_BA(const FreeComplex& b, const HyperbolicFrame& frame);

struct FrameSearchResult {
  HyperbolicFrame frame;
  SpinorVector lambda;
  int trial = 0;
  GradeReport grade;  // of lambda(H^*)
};

/// Random walk over root moves on the frame, keeping moves that do not
/// lower grade lambda(H^*); nullopt after `budget` trials.
std::optional<FrameSearchResult> search_H(const FreeComplex& b, const HyperbolicFrame& frame, int budget,
                                          std::uint64_t seed);

}  // namespace resfold
