#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resfold/groebner.hpp"

using namespace resfold;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

std::vector<Poly> Ps(const RingPtr& r, std::initializer_list<const char*> ss) {
  std::vector<Poly> out;
  for (auto s : ss) out.push_back(P(r, s));
  return out;
}

RingPtr generic_ring(int rows, int cols, Field f = Field::rationals()) {
  std::vector<std::string> v;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) v.push_back("x" + std::to_string(i) + std::to_string(j));
  return make_ring(v, f);
}

// Independent check: every S-polynomial of the basis divides out to zero
// by naive repeated leading-term division.
bool s_pairs_reduce(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = lcm(g[i].lead().mono, g[j].lead().mono);
      Poly s = g[i].mul_term(l / g[i].lead().mono, Scalar(1)) - g[j].mul_term(l / g[j].lead().mono, Scalar(1));
      if (!gb.normal_form(s).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("basic bases") {
  auto r = make_ring({"x", "y"}, Field::rationals());
  auto gb = groebner_basis(r, Ps(r, {"x", "y"}), MonomialOrder{OrderKind::lex});
  CHECK(gb.generators().size() == 2);
  auto g2 = groebner_basis(r, Ps(r, {"x^2-y", "y^2-x"}));
  // x^4 - x = (x^2+y)(x^2-y) + (y^2-x)
  CHECK(gb.is_zero_ideal() == false);
  CHECK(g2.normal_form(P(r, "x^4-x")).is_zero());
  CHECK(s_pairs_reduce(g2));
  auto unit = groebner_basis(r, Ps(r, {"1"}));
  CHECK(unit.is_unit());
  CHECK(groebner_basis(r, Ps(r, {"x+1", "x"})).is_unit());
}

TEST_CASE("lex elimination") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  auto gb = groebner_basis(r, Ps(r, {"x-y^2", "y-z^3"}), MonomialOrder{OrderKind::lex});
  CHECK(gb.contains(P(r, "x-z^6")));
  bool has_pure_z = false;
  for (const auto& g : gb.generators()) {
    Monomial m = leading_monomial(g, gb.order());
    has_pure_z |= m.exp(0) == 0 && m.exp(1) == 0;
  }
  CHECK_FALSE(has_pure_z);
}

TEST_CASE("membership certificates") {
  auto r = make_ring({"x", "y"}, Field::rationals());
  auto c = membership_with_certificate(P(r, "x"), Ps(r, {"x", "y"}));
  CHECK(c[0] == P(r, "1"));
  CHECK(c[1].is_zero());
  CHECK_THROWS_AS(membership_with_certificate(P(r, "1"), Ps(r, {"x"})), NotMember);
  auto gens = Ps(r, {"x^2-y", "y^2"});
  auto cert = membership_with_certificate(P(r, "x^2*y"), gens);
  CHECK(cert[0] * gens[0] + cert[1] * gens[1] == P(r, "x^2*y"));
}

TEST_CASE("lift through matrix") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  auto m = PolyMatrix::parse(r, {{"x", "y", "0"}, {"z", "x", "y"}});
  auto x = lift_through_matrix(m.column(0), m);
  CHECK(m.apply(x) == m.column(0));
  // Koszul d2 of (x,y) is the column (-y, x); d1 = (x y).
  auto d2 = PolyMatrix::parse(r, {{"-y"}, {"x"}});
  auto k = lift_through_matrix({P(r, "-x*y"), P(r, "x^2")}, d2);
  CHECK(k[0] == P(r, "x"));
  auto inmax = PolyMatrix::parse(r, {{"x", "y"}, {"z", "x"}});
  CHECK_THROWS_AS(lift_through_matrix({P(r, "1"), P(r, "0")}, inmax), NoLift);
  PolyMatrix none(r, 2, 0);
  CHECK_THROWS_AS(lift_through_matrix({P(r, "x"), P(r, "0")}, none), NoLift);
  CHECK(Lifter(none).try_lift({P(r, "0"), P(r, "0")}).has_value());
}

TEST_CASE("lift through a dense inhomogeneous matrix") {
  // Linear entries with constants, mixed by a random change of basis; such
  // inputs used to blow up before the rows were ordered term first.
  auto r = make_ring({"x", "y", "z"}, Field::prime(101));
  std::mt19937_64 rng(11);
  auto rnd = [&] { return Poly::constant(r, r->field().random(rng, 50, false)); };
  for (int t = 0; t < 3; ++t) {
    PolyMatrix m(r, 10, 8);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i == 5) continue;
        m.at(i, j) = rnd();
        if (i < 5)
          for (int v = 0; v < 3; ++v) m.at(i, j) += rnd() * Poly::variable(r, v);
      }
    Lifter l(m);
    PolyVec x(8, Poly(r));
    for (auto& e : x) e = rnd() + rnd() * Poly::variable(r, 1);
    auto y = l.lift(m.apply(x));
    CHECK(m.apply(y) == m.apply(x));
    CHECK((m * l.syzygies()).is_zero());
    PolyVec off(10, Poly(r));
    off[5] = Poly::constant(r, 1);
    CHECK_FALSE(l.try_lift(off).has_value());
  }
}

TEST_CASE("syzygies") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  auto row = PolyMatrix::parse(r, {{"x", "y", "z"}});
  auto s = syzygy_generators(row);
  CHECK((row * s).is_zero());
  CHECK(s.cols() == 3);
  // Every Koszul relation lies in the span.
  Lifter ls(s);
  CHECK(ls.try_lift({P(r, "y"), P(r, "-x"), P(r, "0")}).has_value());
  CHECK(ls.try_lift({P(r, "0"), P(r, "z"), P(r, "-y")}).has_value());
  CHECK(ls.try_lift({P(r, "z"), P(r, "0"), P(r, "-x")}).has_value());
  auto indep = PolyMatrix::parse(r, {{"1", "x"}, {"0", "1"}, {"y", "z"}});
  CHECK(syzygy_generators(indep).cols() == 0);
  auto zero_col = PolyMatrix::parse(r, {{"x", "0"}});
  auto sz = syzygy_generators(zero_col);
  CHECK(sz.cols() == 1);
  CHECK((zero_col * sz).is_zero());
}

TEST_CASE("syzygies of 2x3 generic minors") {
  auto r = generic_ring(2, 3);
  auto row = PolyMatrix::parse(r, {{"x12*x23-x13*x22", "-(x11*x23-x13*x21)", "x11*x22-x12*x21"}});
  auto s = syzygy_generators(row);
  CHECK((row * s).is_zero());
  // The two rows of the generic matrix are syzygies (Hilbert-Burch).
  Lifter ls(s);
  CHECK(ls.try_lift({P(r, "x11"), P(r, "x12"), P(r, "x13")}).has_value());
  CHECK(ls.try_lift({P(r, "x21"), P(r, "x22"), P(r, "x23")}).has_value());
}

TEST_CASE("codimension") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  CHECK(codimension(r, Ps(r, {"x", "y", "z"})) == 3);
  CHECK(codimension(r, Ps(r, {"1"})) == kInfiniteGrade);
  CHECK(codimension(r, Ps(r, {"0"})) == 0);
  CHECK(codimension(r, Ps(r, {"x*y", "x*z"})) == 1);
  CHECK(codimension(r, Ps(r, {"x^2", "y^3"})) == 2);
  auto g = generic_ring(3, 3);
  std::vector<Poly> minors;
  const char* v[3][3] = {{"x11", "x12", "x13"}, {"x21", "x22", "x23"}, {"x31", "x32", "x33"}};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = c + 1; d < 3; ++d)
          minors.push_back(P(g, v[a][c]) * P(g, v[b][d]) - P(g, v[a][d]) * P(g, v[b][c]));
  CHECK(codimension(g, minors) == 4);
}

TEST_CASE("codimension of koszul ideals") {
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::string> vars;
    for (int i = 0; i < 6; ++i) vars.push_back("t" + std::to_string(i));
    auto r = make_ring(vars, Field::prime(101));
    std::vector<Poly> gens;
    for (int i = 0; i < k; ++i) gens.push_back(Poly::variable(r, i).pow(i + 1));
    CHECK(codimension(r, gens) == k);
  }
}

TEST_CASE("hitting sets") {
  CHECK(min_hitting_set({0b11, 0b110, 0b100}) == 2);
  CHECK(min_hitting_set({0b1, 0b10, 0b100}) == 3);
  CHECK(min_hitting_set({0b111}) == 1);
  CHECK(min_hitting_set({}) == 0);
}

TEST_CASE("ideal equality and radicals") {
  auto r = make_ring({"x", "y"}, Field::rationals());
  CHECK(ideal_equal(r, Ps(r, {"x^2", "x*y"}), Ps(r, {"x*x", "x*y", "x^2+x*y"})));
  CHECK_FALSE(ideal_equal(r, Ps(r, {"x^2"}), Ps(r, {"x"})));
  CHECK(radical_membership(P(r, "x"), Ps(r, {"x^2"})));
  CHECK_FALSE(radical_membership(P(r, "y"), Ps(r, {"x^2"})));
  CHECK(radical_membership(P(r, "x+y"), Ps(r, {"x^3", "y^2"})));
}

TEST_CASE("random ideals: bases are groebner and deterministic") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto r = make_ring({"a", "b", "c", "d"}, f);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Poly> gens;
      for (int k = 0; k < 3; ++k) {
        std::vector<Term> ts;
        for (int t = 0; t < 3; ++t) {
          Monomial m;
          for (int v = 0; v < 4; ++v) m.set_exp(v, static_cast<int>(rng() % 2));
          ts.push_back({m, f.random(rng, 5, true)});
        }
        gens.push_back(Poly::from_terms(r, ts));
      }
      auto gb = groebner_basis(r, gens);
      CHECK(s_pairs_reduce(gb));
      for (const auto& g : gens) CHECK(gb.contains(g));
      auto again = groebner_basis(r, gens);
      CHECK(again.generators() == gb.generators());
      // Lifts certify the basis elements lie in the original ideal.
      PolyMatrix row(r, 1, 3);
      for (int i = 0; i < 3; ++i) row.at(0, i) = gens[i];
      Lifter lifter(row);
      for (const auto& g : gb.generators()) {
        auto c = lifter.try_lift({g});
        REQUIRE(c.has_value());
        CHECK(row.apply(*c)[0] == g);
      }
    }
  }
}
