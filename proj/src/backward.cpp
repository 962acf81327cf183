#include "resfold/backward.hpp"

#include <random>

#include "resfold/determinantal.hpp"

namespace resfold {

namespace {

PolyMatrix singleton_row(const SpinorVector& lambda, const RingPtr& ring) {
  PolyMatrix d1(ring, 1, lambda.n);
  for (int i = 0; i < lambda.n; ++i) d1.at(0, i) = lambda.at(1u << i, ring);
  return d1;
}

GradeReport singleton_grade(const SpinorVector& lambda, const RingPtr& ring, std::uint64_t seed) {
  PolyMatrix d1 = singleton_row(lambda, ring);
  if (d1.is_zero()) return {};
  GradeOptions opt;
  opt.seed = seed;
  opt.full_limit = 0;
  return grade_of_minors(d1, 1, 3, opt);
}

}  // namespace

FreeComplex build_A(const FreeComplex& b, const HyperbolicFrame& frame, const SpinorVector& lambda, const PolyMatrix& w) {
  if (b.length() != 4) throw DimensionMismatch("B must have length 4");
  if (lambda.parity != 1) throw WrongComponent();
  const RingPtr& ring = b.ring;
  int n = frame.n;
  PolyMatrix d3 = b.diff(4).hstack(w.columns(0, 1));
  PolyMatrix d2 = (b.diff(2) * frame.H()).transpose();
  PolyMatrix d1 = singleton_row(lambda, ring);
  FreeComplex a(ring, {d1, d2, d3});
  std::vector<std::string> hstar;
  for (int i = 1; i <= n; ++i) hstar.push_back("e'_" + std::to_string(i));
  std::vector<std::string> a3 = b.labels.size() > 4 ? b.labels[4] : std::vector<std::string>{};
  if (!a3.empty()) a3.push_back("1");
  a.labels = {{"1"}, hstar, b.labels.size() > 3 ? b.labels[3] : std::vector<std::string>{}, a3};
  return a;
}

GradeIVerdict certify_grade_I(const FreeComplex& a, bool use_d2, const GradeOptions& opt) {
  GradeIVerdict v;
  const PolyMatrix& d1 = a.diff(1);
  v.direct = d1.is_zero() ? GradeReport{} : grade_of_minors(d1, 1, 3, opt);
  v.hypothesis = v.direct.value >= 3;
  if (!v.hypothesis && use_d2) {
    const PolyMatrix& d2 = a.diff(2);
    v.via_d2 = grade_of_minors(d2, d2.rows() - 1, 3, opt);
    v.hypothesis = v.via_d2->value >= 3;
  }
  if (v.hypothesis) v.acyclicity = be_acyclicity(a, opt);
  return v;
}

BackwardResult theorem_BA(const FreeComplex& b, const HyperbolicFrame& frame) {
  BackwardResult r{frame, spinor_coordinates(b.diff(3), frame), {}, {}};
  r.w = build_w(b, frame, r.lambda);
  r.a = build_A(b, frame, r.lambda, r.w);
  return r;
}

std::optional<FrameSearchResult> search_H(const FreeComplex& b, const HyperbolicFrame& frame, int budget,
                                          std::uint64_t seed) {
  const PolyMatrix& d3 = b.diff(3);
  const RingPtr& ring = b.ring;
  int n = frame.n;
  HyperbolicFrame current = frame;
  if (component_test(d3, current, seed) == Component::same_as_Hstar)
    current = move_frame(current, {FrameMove::swap, n - 1, 0, 1});
  SpinorVector lambda = spinor_coordinates(d3, current, seed);
  GradeReport grade = singleton_grade(lambda, ring, seed);
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  for (int trial = 0; trial < budget; ++trial) {
    if (trial > 0 && n > 1) {
      FrameMove mv;
      mv.kind = static_cast<FrameMove::Kind>(trial % 3);
      mv.i = static_cast<int>(rng() % n);
      do mv.j = static_cast<int>(rng() % n);
      while (mv.j == mv.i);
      if (trial % 2) {
        mv.alpha = 1;
      } else {
        long a = static_cast<long>(rng() % 6) - 3;
        mv.alpha = a >= 0 ? a + 1 : a;
      }
      mv.alpha = ring->field().reduce(mv.alpha);
      SpinorVector moved = move_spinor(lambda, mv);
      GradeReport g = singleton_grade(moved, ring, seed + trial);
      if (g.value < grade.value) continue;
      current = move_frame(current, mv);
      lambda = std::move(moved);
      grade = g;
    }
    if (grade.value >= 3) return FrameSearchResult{current, lambda, trial, grade};
  }
  return std::nullopt;
}

}  // namespace resfold
