#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resfold/determinantal.hpp"
#include "resfold/forward.hpp"

using namespace resfold;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

RingPtr standard_ring(std::vector<std::string> names) {
  std::vector<std::vector<int>> deg(names.size(), std::vector<int>{1});
  return make_ring(std::move(names), Field::rationals(), deg);
}

FreeComplex two_by_four() {
  auto r = standard_ring({"a", "b", "c", "d", "e", "f", "g", "h"});
  auto x = PolyMatrix::parse(r, {{"a", "b", "c", "d"}, {"e", "f", "g", "h"}});
  return resolve_ideal(r, minors_ideal(x, 2));
}

bool is_alternating(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  return true;
}

}  // namespace

TEST_CASE("split input gives the split block form") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto r = make_ring({"x", "y"}, f);
    std::mt19937_64 rng(11);
    for (int p = 1; p <= 3; ++p)
      for (int q = 3; q <= 5; ++q) {
        BMap b = zero_bmap(r, p, q);
        for (int i = 0; i < b.b.rows(); ++i)
          for (int j = 0; j < b.b.cols(); ++j) b.b.at(i, j) = Poly::constant(r, f.random(rng, 3, false)) + P(r, "x");
        FreeComplex a = split_A(r, p, q);
        auto m = split_multiplication(r, p, q, b);
        auto v = theorem_AB(a, m, SplittingChoice::identity(r, q - 1));
        CHECK(v.complex_ok);
        CHECK(v.selfdual_ok);
        CHECK(v.grade_j.value == kInfiniteGrade);
        CHECK(v.acyclic());
        const PolyMatrix& d3 = v.b.complex.diff(3);
        int n = p + 2, nm = p + 1, c = q - 2;
        // Rows: r*, m*, r, m. Columns: C, L, M.
        CHECK(d3.columns(0, c).is_zero());
        CHECK(d3.row_block(n, 1).is_zero());
        PolyMatrix mrows = d3.row_block(n + 1, nm);
        CHECK(mrows.columns(0, c + 1).is_zero());
        CHECK(mrows.columns(c + 1, nm) == PolyMatrix::identity(r, nm));
        PolyMatrix mstar = d3.row_block(1, nm);
        CHECK(mstar.columns(0, c + 1).is_zero());
        CHECK(is_alternating(mstar.columns(c + 1, nm)));
        CHECK(d3.at(0, c) == P(r, "1"));
        CHECK(is_split_exact(v.b.complex));
        auto found = search_C(a, m, 3, 0);
        REQUIRE(found);
        CHECK(found->trial == 0);
      }
  }
}

TEST_CASE("square of the maximal ideal") {
  FreeComplex a = resolve_square_of_max_ideal();
  auto m = build_multiplication(a);
  auto v = theorem_AB(a, m, SplittingChoice::identity(a.ring, 3));
  CHECK(v.b.complex.format() == std::vector<int>{2, 8, 12, 8, 2});
  CHECK(v.complex_ok);
  CHECK(v.selfdual_ok);
  const PolyMatrix& d3 = v.b.complex.diff(3);
  CHECK((d3.transpose() * v.b.structure.form * d3).is_zero());
  // Three variables: J cannot reach grade 4.
  CHECK(v.grade_j.value == 3);
  CHECK_FALSE(v.hypothesis);
  CHECK_FALSE(v.acyclicity.has_value());
  CHECK(acyclic_in_grade(v.b.complex, 2).acyclic);
  CHECK_FALSE(search_C(a, m, 25, 0).has_value());
  for (const auto& d : v.b.complex.d)
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) CHECK(d.at(i, j).is_homogeneous());
}

TEST_CASE("not generically gorenstein in four variables") {
  auto r = standard_ring({"x", "y", "z", "w"});
  std::vector<Poly> q;
  for (const char* s : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) q.push_back(P(r, s));
  FreeComplex a = resolve_ideal(r, q);
  auto m = build_multiplication(a);
  CHECK_FALSE(search_C(a, m, 25, 0).has_value());
  CHECK_FALSE(search_C(a, m, 25, 7).has_value());
}

TEST_CASE("generic 2x4 minors") {
  FreeComplex a = two_by_four();
  CHECK(a.format() == std::vector<int>{1, 6, 8, 3});
  auto m = build_multiplication(a);
  auto found = search_C(a, m, 25, 0);
  REQUIRE(found);
  auto v = theorem_AB(a, m, found->choice);
  CHECK(v.complex_ok);
  CHECK(v.selfdual_ok);
  CHECK(v.grade_j.value == 4);
  CHECK(v.acyclic());
  // Recomputed on the output complex.
  GradeReport g = grade_J(v.b.complex);
  CHECK(g.value == 4);
}

TEST_CASE("compatible with specialization") {
  FreeComplex a = two_by_four();
  auto m = build_multiplication(a);
  std::map<int, Scalar> pt{{0, 2}, {5, -1}, {6, 3}};
  auto s = SplittingChoice::identity(a.ring, 3);
  s.basis_change.at(0, 2) = P(a.ring, "1");
  auto b = build_B(a, m, s);
  FreeComplex as = FreeComplex::unchecked(a.ring, {a.diff(1).specialize(pt), a.diff(2).specialize(pt), a.diff(3).specialize(pt)});
  MultiplicationStructure ms{m.m11.specialize(pt), m.m12.specialize(pt)};
  auto bs = build_B(as, ms, s);
  for (int i = 1; i <= 4; ++i) CHECK(bs.complex.diff(i) == b.complex.diff(i).specialize(pt));
}

TEST_CASE("bad inputs") {
  auto r = standard_ring({"x", "y", "z"});
  FreeComplex k = koszul(r, {P(r, "x"), P(r, "y"), P(r, "z")});
  auto m = build_multiplication(k);
  // q = 2 is outside the construction.
  CHECK_THROWS_AS(build_B(k, m, SplittingChoice::identity(r, 1)), Error);
  FreeComplex a = resolve_square_of_max_ideal();
  auto ma = build_multiplication(a);
  ma.m11.at(0, 0) += P(a.ring, "x");
  CHECK_THROWS_AS(build_B(a, ma, SplittingChoice::identity(a.ring, 3)), Error);
}
