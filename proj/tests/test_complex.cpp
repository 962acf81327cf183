#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resfold/determinantal.hpp"
#include "resfold/generators.hpp"

using namespace resfold;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

RingPtr xyzw() { return make_ring({"x", "y", "z", "w"}, Field::rationals()); }

std::vector<Poly> vars(const RingPtr& r, int k) {
  std::vector<Poly> out;
  for (int i = 0; i < k; ++i) out.push_back(Poly::variable(r, i));
  return out;
}

}  // namespace

TEST_CASE("koszul is a complex and perturbing it is caught") {
  auto r = xyzw();
  FreeComplex k = koszul(r, vars(r, 3));
  CHECK(k.format() == std::vector<int>{1, 3, 3, 1});
  CHECK(check_complex(k).ok);
  FreeComplex bad = k;
  bad.diff(1).at(0, 0) += P(r, "w");
  auto rep = check_complex(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.checks.size() == 2);
  CHECK_FALSE(rep.checks[0].zero);
  CHECK(rep.checks[0].entry == std::make_pair(0, 0));
  CHECK(rep.checks[1].zero);
  CHECK_THROWS_AS(FreeComplex(r, bad.d), NotAComplex);
  bad = k;
  bad.d[1] = bad.d[1].columns(0, 2);
  CHECK_FALSE(check_complex(bad).shapes_ok);
}

TEST_CASE("koszul grades") {
  auto r = xyzw();
  FreeComplex k = koszul(r, vars(r, 4));
  auto v = be_acyclicity(k);
  CHECK(v.acyclic);
  REQUIRE(v.entries.size() == 4);
  // Every I_{r_i}(d_i) of the Koszul complex on a regular sequence has radical (x,y,z,w).
  for (int i = 0; i < 4; ++i) {
    auto g = grade_of_minors(k.diff(i + 1), v.entries[i].expected_rank, 99);
    CHECK(g.value == 4);
    CHECK(g.exact);
  }
  GradeOptions opt;
  auto low = grade_of_minors(k.diff(1), 1, 2, opt);
  CHECK(low.value >= 2);
}

TEST_CASE("non-regular sequence fails the criterion") {
  auto r = xyzw();
  FreeComplex k = koszul(r, {P(r, "x"), P(r, "x*y"), P(r, "z")});
  auto v = be_acyclicity(k);
  CHECK_FALSE(v.acyclic);
  CHECK_FALSE(v.undetermined);
  CHECK(v.explain().find("not acyclic") != std::string::npos);
}

TEST_CASE("rank deficit") {
  auto r = xyzw();
  // d_2 has rank 1 where 2 is needed.
  PolyMatrix a = PolyMatrix::parse(r, {{"0", "x"}});
  PolyMatrix b = PolyMatrix::parse(r, {{"x", "y"}, {"0", "0"}});
  FreeComplex f(r, {a, b});
  auto v = be_acyclicity(f);
  CHECK_FALSE(v.acyclic);
  CHECK_FALSE(v.rank_ok);
}

TEST_CASE("dualize twice") {
  auto r = xyzw();
  FreeComplex k = koszul(r, vars(r, 3));
  FreeComplex dd = dualize(dualize(k));
  REQUIRE(dd.length() == k.length());
  for (int i = 1; i <= k.length(); ++i) CHECK(dd.diff(i) == k.diff(i));
  CHECK(check_complex(dualize(k)).ok);
  CHECK(dualize(k).format() == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("self duality") {
  auto gn = gn_complex(2);
  CHECK(check_selfdual(gn.complex, gn.structure).ok);
  FreeComplex broken = gn.complex;
  broken.diff(2).at(0, 0) += Poly::variable(broken.ring, 0);
  auto rep = check_selfdual(broken, gn.structure);
  CHECK_FALSE(rep.ok);
  CHECK(rep.reason.find("(0, 0)") != std::string::npos);
  auto r = xyzw();
  CHECK_FALSE(check_selfdual(koszul(r, vars(r, 3)), {hyperbolic_form(r, 1)}).ok);
}

TEST_CASE("split exactness") {
  auto r = xyzw();
  CHECK(is_split_exact(split_A(r, 1, 3)));
  CHECK(is_split_exact(split_B(r, 1, 3).complex));
  CHECK_FALSE(is_split_exact(koszul(r, vars(r, 3))));
  // The unit ideal has a split Koszul complex.
  CHECK(is_split_exact(koszul(r, {P(r, "1"), P(r, "x")})));
}

TEST_CASE("resolved ideal") {
  auto r = xyzw();
  FreeComplex k = koszul(r, vars(r, 3));
  CHECK(resolved_ideal(k) == vars(r, 3));
  CHECK_THROWS_AS(resolved_ideal(split_B(r, 1, 4).complex), Error);
}

TEST_CASE("acyclic in grade") {
  auto r = xyzw();
  // Koszul on (x, y, x*z): grade 2 ideal, so exact only in low grade.
  FreeComplex k = koszul(r, {P(r, "x"), P(r, "y"), P(r, "x*z")});
  CHECK_FALSE(be_acyclicity(k).acyclic);
  CHECK(acyclic_in_grade(k, 1).acyclic);
}
