#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>

#include "json.hpp"
#include "resfold/backward.hpp"
#include "resfold/determinantal.hpp"
#include "resfold/forward.hpp"

using namespace resfold;

namespace {

struct Printed {
  PolyMatrix d2, d3, d1;
};

Printed load_printed(const RingPtr& r) {
  std::ifstream in(std::string(RESFOLD_GOLDEN_DIR) + "/gn3_printed.json");
  REQUIRE(in);
  auto j = nlohmann::json::parse(in);
  Printed p;
  p.d2 = PolyMatrix::parse(r, j["d2"].get<std::vector<std::vector<std::string>>>());
  p.d3 = PolyMatrix::parse(r, j["d3"].get<std::vector<std::vector<std::string>>>());
  p.d1 = PolyMatrix::parse(r, {j["d1"].get<std::vector<std::string>>()});
  return p;
}

// Every column of a lies in the column span of b.
bool spans(const PolyMatrix& b, const PolyMatrix& a) {
  Lifter l(b);
  for (int c = 0; c < a.cols(); ++c)
    if (!l.try_lift(a.column(c))) return false;
  return true;
}

PolyMatrix random_alternating(const RingPtr& r, int n, std::mt19937_64& rng) {
  PolyMatrix phi(r, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      phi.at(i, j) = Poly::variable(r, static_cast<int>(rng() % r->nvars())).scaled(r->field().random(rng, 3, false));
      phi.at(j, i) = -phi.at(i, j);
    }
  return phi;
}

}  // namespace

TEST_CASE("split B gives the split block form of A") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto r = make_ring({"x", "y", "z"}, f);
    std::mt19937_64 rng(21);
    for (int p = 1; p <= 3; ++p)
      for (int q = 3; q <= 5; ++q) {
        int n = p + 2, c = q - 2;
        auto b = split_B(r, p, q, random_alternating(r, n, rng));
        auto res = theorem_BA(b.complex, b.frame);
        const FreeComplex& a = res.a;
        CHECK(a.format() == std::vector<int>{1, n, p + q, q - 1});
        const PolyMatrix& d3 = a.diff(3);
        CHECK(d3.row_block(0, c).columns(0, c) == PolyMatrix::identity(r, c));
        CHECK(d3.row_block(c, n).columns(0, c).is_zero());
        for (int i = 0; i < n; ++i) CHECK(d3.at(c + i, c) == Poly::constant(r, i == 0 ? 1 : 0));
        const PolyMatrix& d2 = a.diff(2);
        CHECK(d2.columns(0, c + 1).is_zero());
        PolyMatrix lower(r, n, n - 1);
        for (int i = 1; i < n; ++i) lower.at(i, i - 1) = Poly::constant(r, 1);
        CHECK(d2.columns(c + 1, n - 1) == lower);
        PolyMatrix d1(r, 1, n);
        d1.at(0, 0) = Poly::constant(r, 1);
        CHECK(a.diff(1) == d1);
        CHECK(is_split_exact(a));
        auto v = certify_grade_I(a);
        CHECK(v.direct.value == kInfiniteGrade);
        CHECK(v.acyclic());
        auto s = search_H(b.complex, b.frame, 5, 0);
        REQUIRE(s);
        CHECK(s->trial == 0);
      }
  }
}

TEST_CASE("GN n=3 with the printed H reproduces the printed matrices") {
  auto gn = gn_complex(3);
  const auto& r = gn.complex.ring;
  auto printed = load_printed(r);
  auto res = theorem_BA(gn.complex, gn_paper_H(gn));
  const FreeComplex& a = res.a;
  CHECK(a.format() == std::vector<int>{1, 8, 9, 2});
  CHECK(check_complex(a).ok);
  CHECK(a.diff(2) == printed.d2);
  bool same = a.diff(1) == printed.d1, opposite = a.diff(1) == -printed.d1;
  CHECK((same || opposite));
  CHECK(spans(a.diff(3), printed.d3));
  CHECK(spans(printed.d3, a.diff(3)));
  // The first column is adj(X) itself, the difference of the printed columns.
  auto x = generic_matrix(r, 3);
  auto adj = adjugate(x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(printed.d3.at(3 * i + j, 0) - printed.d3.at(3 * i + j, 1) == adj.at(i, j));
  auto v = certify_grade_I(a);
  CHECK(v.direct.value == 3);
  CHECK(v.hypothesis);
  CHECK(v.acyclic());
}

TEST_CASE("I and the submaximal minors of d_2 have the same radical") {
  auto gn = gn_complex(3);
  auto a = theorem_BA(gn.complex, gn_paper_H(gn)).a;
  auto ideal = resolved_ideal(a);
  auto minors = minors_ideal(a.diff(2), 7);
  REQUIRE(!minors.empty());
  for (const Poly& f : ideal) CHECK(radical_membership(f, minors));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 6; ++t) CHECK(radical_membership(minors[rng() % minors.size()], ideal));
  auto v = certify_grade_I(a, true);
  CHECK_FALSE(v.via_d2.has_value());
  GradeOptions opt;
  opt.full_limit = 0;
  CHECK(grade_of_minors(a.diff(2), 7, 3, opt).value >= 3);
}

TEST_CASE("an SL(H) move changes d_2 by the contragredient matrix") {
  auto gn = gn_complex(3);
  const auto& r = gn.complex.ring;
  auto frame = gn_paper_H(gn);
  auto base = theorem_BA(gn.complex, frame);
  for (auto [i, j, a] : std::vector<std::tuple<int, int, int>>{{0, 3, 1}, {5, 2, -2}, {7, 1, 3}}) {
    FrameMove mv{FrameMove::sl, i, j, a};
    auto moved = move_frame(frame, mv);
    auto lam = move_spinor(base.lambda, mv);
    auto w = build_w(gn.complex, moved, lam);
    auto a2 = build_A(gn.complex, moved, lam, w);
    CHECK(check_complex(a2).ok);
    PolyMatrix g = PolyMatrix::identity(r, 8);
    g.at(i, j) = Poly::constant(r, a);
    CHECK(a2.diff(2) == g.transpose() * base.a.diff(2));
    // lambda on H^* moves by the inverse.
    PolyMatrix ginv = PolyMatrix::identity(r, 8);
    ginv.at(i, j) = Poly::constant(r, -a);
    CHECK(a2.diff(1) == base.a.diff(1) * ginv.transpose());
  }
}

TEST_CASE("a poor frame gives a complex of too small grade") {
  auto gn = gn_complex(3);
  auto frame = move_frame(gn.frame, {FrameMove::swap, 7, 0, 1});
  auto res = theorem_BA(gn.complex, frame);
  CHECK(check_complex(res.a).ok);
  auto v = certify_grade_I(res.a, false);
  CHECK(v.direct.value < 3);
  CHECK_FALSE(v.hypothesis);
  CHECK_FALSE(v.acyclicity.has_value());
  CHECK_THROWS_AS(theorem_BA(gn.complex, gn.frame), WrongComponent);
}

TEST_CASE("search for H on GN n=3") {
  auto gn = gn_complex(3);
  auto s = search_H(gn.complex, gn.frame, 100, 0);
  REQUIRE(s);
  CHECK(s->grade.value >= 3);
  CHECK(s->frame.valid());
  auto w = build_w(gn.complex, s->frame, s->lambda);
  auto a = build_A(gn.complex, s->frame, s->lambda, w);
  auto v = certify_grade_I(a);
  CHECK(v.hypothesis);
  CHECK(v.acyclic());
  // Deterministic per seed.
  auto again = search_H(gn.complex, gn.frame, 100, 0);
  REQUIRE(again);
  CHECK(again->trial == s->trial);
  CHECK(again->frame.embed == s->frame.embed);
}

TEST_CASE("round trip on GN n=3 recovers the ideal") {
  auto gn = gn_complex(3);
  const auto& r = gn.complex.ring;
  auto a = theorem_BA(gn.complex, gn_paper_H(gn)).a;
  auto m = build_multiplication(a);
  auto s = search_C(a, m, 25, 0);
  REQUIRE(s);
  auto v = theorem_AB(a, m, s->choice);
  CHECK(v.complex_ok);
  CHECK(v.selfdual_ok);
  CHECK(v.acyclic());
  CHECK(v.b.complex.format() == std::vector<int>{1, 9, 16, 9, 1});
  CHECK(ideal_equal(r, resolved_ideal(v.b.complex), minors_ideal(generic_matrix(r, 3), 2)));
}

TEST_CASE("B only acyclic in grade 2 still yields a complex") {
  auto b = resolve_square_of_max_ideal();
  auto m = build_multiplication(b);
  auto fb = build_B(b, m, SplittingChoice::identity(b.ring, 3));
  CHECK(acyclic_in_grade(fb.complex, 2).acyclic);
  auto s = search_H(fb.complex, fb.frame, 30, 0);
  HyperbolicFrame frame = s ? s->frame : fb.frame;
  if (!s && component_test(fb.complex.diff(3), frame) == Component::same_as_Hstar)
    frame = move_frame(frame, {FrameMove::swap, frame.n - 1, 0, 1});
  auto res = theorem_BA(fb.complex, frame);
  CHECK(check_complex(res.a).ok);
  CHECK(res.a.format() == std::vector<int>{1, 6, 8, 3});
}
