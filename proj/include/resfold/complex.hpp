#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resfold/groebner.hpp"

namespace resfold {

class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// F_c -> ... -> F_1 -> F_0 with d[i-1] = d_i : F_i -> F_{i-1}.
struct FreeComplex {
  RingPtr ring;
  std::vector<int> ranks;
  std::vector<PolyMatrix> d;
  std::vector<std::vector<std::string>> labels;  // per module, optional

  FreeComplex() = default;
  /// Validates shapes and d_i d_{i+1} = 0; throws NotAComplex.
  FreeComplex(RingPtr ring, std::vector<PolyMatrix> differentials);
  static FreeComplex unchecked(RingPtr ring, std::vector<PolyMatrix> differentials);

  int length() const { return static_cast<int>(d.size()); }
  const PolyMatrix& diff(int i) const { return d.at(i - 1); }
  PolyMatrix& diff(int i) { return d.at(i - 1); }
  const std::vector<int>& format() const { return ranks; }
};

struct CompositionCheck {
  int i;  // checks d_i * d_{i+1}
  bool zero;
  std::optional<std::pair<int, int>> entry;
};

struct ComplexReport {
  bool ok = true;
  bool shapes_ok = true;
  std::string shape_error;
  std::vector<CompositionCheck> checks;
};

ComplexReport check_complex(const FreeComplex& f);

struct GradeOptions {
  std::uint64_t seed = 1;
  /// Enumerate every minor when there are at most this many.
  int full_limit = 300;
  /// Random minors tried before walking the full list.
  int sample_budget = 60;
  /// Then walk every minor if there are at most this many.
  double enumerate_limit = 300000;
  /// Stop as soon as the target is certified.
  bool stop_at_target = true;
};

/// Grade of I_k(M): a certified lower bound, exact when `exact`.
struct GradeReport {
  int value = 0;
  bool exact = false;
  int generators_used = 0;
};

GradeReport grade_of_minors(const PolyMatrix& m, int k, int target, const GradeOptions& opt = {});

struct AcyclicityEntry {
  int i;
  int expected_rank;
  int rank;
  int required_grade;
  GradeReport grade;
  bool ok;
};

struct AcyclicityVerdict {
  bool acyclic = false;
  bool rank_ok = true;
  /// True when a failure rests on an inexact bound.
  bool undetermined = false;
  std::vector<AcyclicityEntry> entries;
  std::string explain() const;
};

AcyclicityVerdict be_acyclicity(const FreeComplex& f, const GradeOptions& opt = {});
AcyclicityVerdict acyclic_in_grade(const FreeComplex& f, int s, const GradeOptions& opt = {});

FreeComplex dualize(const FreeComplex& f);

struct SelfDualStructure {
  PolyMatrix form;
  std::string twist = "L";
  std::vector<int> twist_degree;
};

struct SelfDualReport {
  bool ok = false;
  std::string reason;
};

/// Checks d_2 = d_3^T G and d_1 = d_4^T with G symmetric of unit determinant.
SelfDualReport check_selfdual(const FreeComplex& b, const SelfDualStructure& s);

/// Standard hyperbolic form [[0, I], [I, 0]] of size 2n.
PolyMatrix hyperbolic_form(RingPtr ring, int n);

bool is_split_exact(const FreeComplex& f, const GradeOptions& opt = {});
/// Nonzero entries of d_1; requires rank F_0 = 1.
std::vector<Poly> resolved_ideal(const FreeComplex& f);

}  // namespace resfold
