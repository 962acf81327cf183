#include "resfold/forward.hpp"

#include <random>

namespace resfold {

namespace {

ScalarMatrix to_scalars(const PolyMatrix& m) {
  if (!m.is_constant()) throw Error("basis change must be constant");
  std::vector<Scalar> origin(m.ring()->nvars(), 0);
  return evaluate(m, origin);
}

PolyMatrix to_polys(const RingPtr& ring, const ScalarMatrix& s) {
  PolyMatrix m(ring, s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s.at(i, j) != 0) m.at(i, j) = Poly::constant(ring, s.at(i, j));
  return m;
}

void check_input(const FreeComplex& a) {
  if (a.length() != 3 || a.ranks[0] != 1) throw Error("expected a length three complex with A_0 = R");
  int p = a.ranks[1] - 2, q = a.ranks[3] + 1;
  if (p < 1 || q < 3 || a.ranks[2] != p + q) throw Error("expected format (1, p+2, p+q, q-1) with p >= 1, q >= 3");
}

std::vector<std::string> labels_or(const std::vector<std::string>& l, int n, const std::string& stem) {
  if (static_cast<int>(l.size()) == n) return l;
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

SplittingChoice SplittingChoice::identity(RingPtr ring, int rank) { return {PolyMatrix::identity(ring, rank)}; }

PolyMatrix SplittingChoice::eta() const {
  auto inv = to_scalars(basis_change).inverse();
  if (!inv) throw Error("basis change is singular");
  return to_polys(basis_change.ring(), *inv).row_block(basis_change.rows() - 1, 1);
}

PolyMatrix SplittingChoice::c_inclusion() const { return basis_change.columns(0, basis_change.cols() - 1); }

SelfDualExample build_B(const FreeComplex& a, const MultiplicationStructure& m, const SplittingChoice& s) {
  check_input(a);
  const RingPtr& ring = a.ring;
  int r1 = a.ranks[1], r2 = a.ranks[2], r3 = a.ranks[3];
  if (s.basis_change.rows() != r3 || s.basis_change.cols() != r3) throw DimensionMismatch("basis change must be square of size rank A_3");
  auto rep = verify_multiplication(a, m);
  if (!rep.ok) throw Error("multiplication does not satisfy the lift identities: " + rep.failure);

  PolyMatrix d4 = a.diff(3) * s.c_inclusion();
  PolyMatrix eta = s.eta();
  PolyMatrix d3(ring, 2 * r1, r2);
  PolyMatrix products = eta * m.m12;
  for (int e = 0; e < r1; ++e)
    for (int f = 0; f < r2; ++f) d3.at(e, f) = products.at(0, e * r2 + f);
  for (int k = 0; k < r1; ++k)
    for (int f = 0; f < r2; ++f) d3.at(r1 + k, f) = a.diff(2).at(k, f);
  PolyMatrix g = hyperbolic_form(ring, r1);
  PolyMatrix d2 = d3.transpose() * g, d1 = d4.transpose();

  auto l1 = labels_or(a.diff(2).row_labels, r1, "e_");
  auto l2 = labels_or(a.diff(2).col_labels, r2, "f_");
  std::vector<std::string> lc, lcd, lb2, lb1;
  for (int i = 1; i < r3; ++i) lc.push_back("c_" + std::to_string(i));
  for (const auto& x : lc) lcd.push_back(x + "*");
  for (const auto& x : l1) lb2.push_back(x + "*");
  lb2.insert(lb2.end(), l1.begin(), l1.end());
  for (const auto& x : l2) lb1.push_back(x + "*");
  d4.row_labels = d3.col_labels = l2;
  d4.col_labels = lc;
  d3.row_labels = d2.col_labels = lb2;
  d2.row_labels = d1.col_labels = lb1;
  d1.row_labels = lcd;

  SelfDualExample out;
  out.complex = FreeComplex::unchecked(ring, {d1, d2, d3, d4});
  out.complex.labels = {lcd, lb1, lb2, l2, lc};
  out.structure.form = g;
  out.frame = {r1, PolyMatrix::identity(ring, 2 * r1), g};
  return out;
}

GradeReport grade_J(const FreeComplex& b, const GradeOptions& opt) {
  return grade_of_minors(b.diff(4), b.diff(4).cols(), 4, opt);
}

ForwardVerdict theorem_AB(const FreeComplex& a, const MultiplicationStructure& m, const SplittingChoice& s,
                          const GradeOptions& opt) {
  ForwardVerdict v;
  v.b = build_B(a, m, s);
  v.complex_ok = check_complex(v.b.complex).ok;
  v.selfdual_ok = check_selfdual(v.b.complex, v.b.structure).ok;
  v.grade_j = grade_J(v.b.complex, opt);
  v.hypothesis = v.grade_j.value >= 4;
  if (v.hypothesis && v.complex_ok) v.acyclicity = be_acyclicity(v.b.complex, opt);
  return v;
}

std::optional<SearchResult> search_C(const FreeComplex& a, const MultiplicationStructure& m, int budget,
                                     std::uint64_t seed) {
  check_input(a);
  if (!verify_multiplication(a, m).ok) throw Error("multiplication does not satisfy the lift identities");
  const RingPtr& ring = a.ring;
  int r3 = a.ranks[3];
  for (int trial = 0; trial < budget; ++trial) {
    SplittingChoice s = SplittingChoice::identity(ring, r3);
    if (trial > 0) {
      std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(trial));
      for (;;) {
        ScalarMatrix g(ring->field(), r3, r3);
        for (int i = 0; i < r3; ++i)
          for (int j = 0; j < r3; ++j) g.at(i, j) = ring->field().random(rng, 3, false);
        if (g.inverse()) {
          s.basis_change = to_polys(ring, g);
          break;
        }
      }
    }
    PolyMatrix d4 = a.diff(3) * s.c_inclusion();
    GradeOptions opt;
    opt.seed = seed + static_cast<std::uint64_t>(trial);
    GradeReport g = grade_of_minors(d4, r3 - 1, 4, opt);
    if (g.value >= 4) return SearchResult{s, trial, g};
  }
  return std::nullopt;
}

}  // namespace resfold
