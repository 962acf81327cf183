#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resfold/determinantal.hpp"
#include "resfold/dga.hpp"
#include "resfold/generators.hpp"

using namespace resfold;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

BMap random_bmap(const RingPtr& r, int p, int q, std::mt19937_64& rng) {
  BMap b = zero_bmap(r, p, q);
  for (int i = 0; i < b.b.rows(); ++i)
    for (int j = 0; j < b.b.cols(); ++j) {
      Poly c = Poly::constant(r, r->field().random(rng, 3, false));
      if (r->nvars() > 0 && rng() % 2) c += Poly::variable(r, static_cast<int>(rng() % r->nvars()));
      b.b.at(i, j) = c;
    }
  return b;
}

}  // namespace

TEST_CASE("pair indexing") {
  auto pairs = combinations(5, 2);
  for (std::size_t k = 0; k < pairs.size(); ++k) CHECK(pair_index(5, pairs[k][0], pairs[k][1]) == static_cast<int>(k));
}

TEST_CASE("koszul products are wedge products") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  FreeComplex k = koszul(r, {P(r, "x"), P(r, "y"), P(r, "z")});
  auto m = build_multiplication(k);
  CHECK(m.m11 == PolyMatrix::identity(r, 3));
  // e_i . e_jk = e_i ^ e_j ^ e_k.
  PolyMatrix triple(r, 1, 9);
  triple.at(0, 0 * 3 + 2) = P(r, "1");
  triple.at(0, 1 * 3 + 1) = P(r, "-1");
  triple.at(0, 2 * 3 + 0) = P(r, "1");
  CHECK(m.m12 == triple);
  CHECK(verify_multiplication(k, m).ok);
}

TEST_CASE("split multiplications") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto r = make_ring({"x", "y"}, f);
    std::mt19937_64 rng(3);
    for (int p = 1; p <= 3; ++p)
      for (int q = 3; q <= 5; ++q) {
        FreeComplex a = split_A(r, p, q);
        auto canon = split_multiplication(r, p, q, zero_bmap(r, p, q));
        CHECK(verify_multiplication(a, canon).ok);
        BMap b = random_bmap(r, p, q, rng);
        auto mb = split_multiplication(r, p, q, b);
        CHECK(verify_multiplication(a, mb).ok);
        CHECK(mb.m11 - canon.m11 == a.diff(3) * b.b);
        // With d_3 = [I; 0], the b of a computed structure is its top block.
        auto built = build_multiplication(a);
        BMap solved{(built.m11 - canon.m11).row_block(0, q - 1)};
        CHECK(split_multiplication(r, p, q, solved).m11 == built.m11);
        CHECK(split_multiplication(r, p, q, solved).m12 == built.m12);
      }
  }
}

TEST_CASE("perturbed products are located") {
  FreeComplex a = resolve_square_of_max_ideal();
  auto m = build_multiplication(a);
  CHECK(verify_multiplication(a, m).ok);
  auto bad = m;
  int col = pair_index(6, 1, 3);
  bad.m11.at(0, col) += Poly::variable(a.ring, 0);
  auto rep = verify_multiplication(a, bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.which == 11);
  CHECK(rep.i == 1);
  CHECK(rep.j == 3);
  bad = m;
  bad.m12.at(0, 5) += P(a.ring, "1");
  rep = verify_multiplication(a, bad);
  CHECK(rep.which == 12);
  CHECK(rep.i == 0);
  CHECK(rep.j == 5);
}

TEST_CASE("transport along a change of basis of A_1") {
  FreeComplex a = resolve_square_of_max_ideal();
  const RingPtr& r = a.ring;
  auto m = build_multiplication(a);
  int r1 = 6, r2 = 8;
  // Unipotent, so the inverse is exact.
  PolyMatrix g = PolyMatrix::identity(r, r1), gi = PolyMatrix::identity(r, r1);
  g.at(0, 2) = P(r, "2");
  g.at(1, 4) = P(r, "-1");
  gi.at(0, 2) = P(r, "-2");
  gi.at(1, 4) = P(r, "1");
  REQUIRE(g * gi == PolyMatrix::identity(r, r1));
  FreeComplex t = FreeComplex(r, {a.diff(1) * g, gi * a.diff(2), a.diff(3)});
  MultiplicationStructure mt;
  mt.m11 = m.m11 * exterior_power(g, 2);
  PolyMatrix kron(r, r1 * r2, r1 * r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r1; ++j)
      for (int f = 0; f < r2; ++f) kron.at(i * r2 + f, j * r2 + f) = g.at(i, j);
  mt.m12 = m.m12 * kron;
  CHECK(verify_multiplication(t, mt).ok);
  // A second lift differs by d_3 b.
  auto m2 = build_multiplication(t);
  auto diff = m2.m11 - mt.m11;
  for (int c = 0; c < diff.cols(); ++c) CHECK(Lifter(t.diff(3)).try_lift(diff.column(c)).has_value());
}

TEST_CASE("graded inputs give graded products") {
  FreeComplex a = resolve_square_of_max_ideal();
  auto m = build_multiplication(a);
  for (int i = 0; i < m.m11.rows(); ++i)
    for (int j = 0; j < m.m11.cols(); ++j) CHECK(m.m11.at(i, j).is_homogeneous());
  for (int i = 0; i < m.m12.rows(); ++i)
    for (int j = 0; j < m.m12.cols(); ++j) CHECK(m.m12.at(i, j).is_homogeneous());
}
