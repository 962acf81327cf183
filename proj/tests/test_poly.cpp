#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resfold/poly.hpp"

using namespace resfold;

namespace {

RingPtr xyz(Field f = Field::rationals()) { return make_ring({"x", "y", "z"}, f); }

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int maxdeg) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> e(0, maxdeg);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < r->nvars(); ++v) m.set_exp(v, e(rng) / r->nvars());
    ts.push_back({m, r->field().random(rng, 9, true)});
  }
  return Poly::from_terms(r, ts);
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field f = Field::prime(101);
  CHECK(f.mul(Scalar(50), Scalar(3)) == Scalar(49));
  CHECK(f.mul(f.inv(Scalar(7)), Scalar(7)) == Scalar(1));
  auto r = f.sqrt(Scalar(4));
  REQUIRE(r);
  CHECK(*r == Scalar(2));
  CHECK_FALSE(f.sqrt(Scalar(2)).has_value());  // 2 is a non-residue mod 101
  CHECK_THROWS(Field::prime(9));
  CHECK_THROWS(Field::prime(2));
  CHECK(Field::parse("fp:101") == f);
  CHECK(Field::parse("QQ").is_rational());
  CHECK(f.reduce(Scalar(1, 2)) == Scalar(51));
}

TEST_CASE("tonelli-shanks agrees with exhaustive search") {
  Field f = Field::prime(97);  // 97 - 1 = 2^5 * 3 exercises the loop
  for (unsigned a = 1; a < 97; ++a) {
    bool residue = false;
    for (unsigned b = 1; b < 97; ++b)
      if (b * b % 97 == a) residue = true;
    auto r = f.sqrt(Scalar(a));
    CHECK(r.has_value() == residue);
    if (r) CHECK(f.mul(*r, *r) == Scalar(a));
  }
}

TEST_CASE("monomial packing") {
  Monomial a, b;
  a.set_exp(0, 2);
  a.set_exp(9, 3);
  b.set_exp(0, 1);
  CHECK(divides(b, a));
  CHECK_FALSE(divides(a, b));
  CHECK((a / b).exp(0) == 1);
  CHECK(lcm(a, b) == a);
  CHECK(a.degree == 5);
  CHECK(a.support_mask() == ((1u << 0) | (1u << 9)));
  Monomial c;
  c.set_exp(31, kMaxExponent);
  CHECK(c.exp(31) == kMaxExponent);
  CHECK(coprime(a, c));
}

TEST_CASE("ring examples") {
  auto r = xyz();
  CHECK((P(r, "x+y") * P(r, "x-y")) == P(r, "x^2-y^2"));
  auto r3 = make_ring({"x"}, Field::prime(3));
  CHECK((P(r3, "x+1") * P(r3, "x+2")) == P(r3, "x^2+2"));
  CHECK(exact_divide(P(r, "x^2-y^2"), P(r, "x-y")) == P(r, "x+y"));
  CHECK_THROWS_AS(exact_divide(P(r, "x^2+y^2"), P(r, "x")), NotDivisible);
  std::map<int, Scalar> pt{{0, 2}, {1, 1}};
  CHECK(P(r, "x^2+y").specialize(pt) == Poly::constant(r, 5));
}

TEST_CASE("printing and parsing") {
  auto r = xyz();
  CHECK(P(r, "3/2*x^2*y - x*y + 1").to_string() == "3/2*x^2*y-x*y+1");
  CHECK(P(r, "-(x+1)^2").to_string() == "-x^2-2*x-1");
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "x/2").to_string() == "1/2*x");
  CHECK_THROWS_AS(P(r, "x+"), ParseError);
  CHECK_THROWS_AS(P(r, "w"), ParseError);
  CHECK_THROWS_AS(P(r, "1/x"), ParseError);
  auto r7 = make_ring({"x"}, Field::prime(7));
  CHECK(P(r7, "-x").to_string() == "6*x");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly p = random_poly(r, rng, 6, 8);
    CHECK(P(r, p.to_string().c_str()) == p);
  }
}

TEST_CASE("gcd") {
  auto r = xyz();
  CHECK(gcd(P(r, "x^2*y"), P(r, "x*y^2")) == P(r, "x*y"));
  CHECK(gcd(P(r, "(x+y)^2*(x-y)"), P(r, "(x+y)*(x-y)^2")) == P(r, "x^2-y^2"));
  CHECK(gcd(P(r, "x+1"), P(r, "x-1")) == P(r, "1"));
  CHECK(gcd(P(r, "0"), P(r, "2*x+4")) == P(r, "x+2"));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(r, rng, 3, 5), b = random_poly(r, rng, 3, 5), c = random_poly(r, rng, 3, 5);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly g = gcd(a * c, b * c);
    CHECK(try_divide(g, c.primitive()).has_value());
    CHECK(try_divide(a * c, g).has_value());
    CHECK(try_divide(b * c, g).has_value());
  }
}

TEST_CASE("perfect square root") {
  auto r = xyz();
  CHECK(perfect_square_root(P(r, "x^2+2*x*y+y^2")) == P(r, "x+y"));
  CHECK(perfect_square_root(P(r, "4*x^2")) == P(r, "2*x"));
  CHECK_THROWS_AS(perfect_square_root(P(r, "x^2+y^2")), NotASquare);
  CHECK_THROWS_AS(perfect_square_root(P(r, "-x^2")), NotASquare);
  auto rp = xyz(Field::prime(101));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Poly g = random_poly(rp, rng, 4, 6);
    if (g.is_zero()) continue;
    Poly s = perfect_square_root(g * g);
    CHECK((s == g || s == -g));
    CHECK(rp->field().is_sign_normalized(s.lead().coeff));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (Field f : {Field::rationals(), Field::prime(101), Field::prime(3)}) {
    auto r = xyz(f);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
      Poly a = random_poly(r, rng, 4, 6), b = random_poly(r, rng, 4, 6), c = random_poly(r, rng, 3, 6);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      std::vector<Scalar> pt{f.random(rng, 20, false), f.random(rng, 20, false), f.random(rng, 20, false)};
      CHECK((a * b).evaluate(pt) == f.mul(a.evaluate(pt), b.evaluate(pt)));
    }
  }
}

TEST_CASE("ring mismatch is rejected") {
  auto a = xyz();
  auto b = make_ring({"x", "y"}, Field::rationals());
  CHECK_THROWS_AS(P(a, "x") + P(b, "x"), RingMismatch);
}
