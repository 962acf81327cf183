#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "resfold/determinantal.hpp"

using namespace resfold;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

RingPtr abc(Field f = Field::rationals()) { return make_ring({"a", "b", "c", "d", "e", "f"}, f); }

PolyMatrix random_matrix(const RingPtr& r, int rows, int cols, std::mt19937_64& rng) {
  PolyMatrix m(r, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Poly p(r);
      for (int t = 0; t < 2; ++t) {
        Monomial mono;
        mono.set_exp(static_cast<int>(rng() % r->nvars()), static_cast<int>(rng() % 2));
        p += Poly::term(r, mono, r->field().random(rng, 4, false));
      }
      m.at(i, j) = p;
    }
  return m;
}

PolyMatrix random_alternating(const RingPtr& r, int n, std::mt19937_64& rng) {
  PolyMatrix m = random_matrix(r, n, n, rng);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Poly(r);
    for (int j = 0; j < i; ++j) m.at(i, j) = -m.at(j, i);
  }
  return m;
}

// Leibniz formula over all permutations.
Poly leibniz(const PolyMatrix& m) {
  int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly sum(m.ring());
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Poly t = Poly::constant(m.ring(), 1);
    for (int i = 0; i < n; ++i) t *= m.at(i, perm[i]);
    sum += (inv & 1) ? -t : t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST_CASE("matrix basics") {
  auto r = abc();
  std::mt19937_64 rng(1);
  auto a = random_matrix(r, 3, 4, rng);
  CHECK(a * PolyMatrix::identity(r, 4) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(a * a, DimensionMismatch);
  auto h = a.hstack(a);
  CHECK(h.cols() == 8);
  CHECK(h.columns(4, 4) == a);
  CHECK(a.vstack(a).row_block(3, 3) == a);
  CHECK(a.submatrix({0, 2}, {1}).at(1, 0) == a.at(2, 1));
}

TEST_CASE("labels propagate") {
  auto r = abc();
  PolyMatrix m(r, 2, 3);
  m.row_labels = {"r0", "r1"};
  m.col_labels = {"c0", "c1", "c2"};
  auto t = m.transpose();
  CHECK(t.row_labels == m.col_labels);
  auto s = m.submatrix({1}, {2, 0});
  CHECK(s.row_labels == std::vector<std::string>{"r1"});
  CHECK(s.col_labels == std::vector<std::string>{"c2", "c0"});
  auto p = m * PolyMatrix(r, 3, 1);
  CHECK(p.row_labels == m.row_labels);
}

TEST_CASE("degree labels") {
  auto r = make_ring({"x", "y"}, Field::rationals(), {{1, 0}, {0, 1}});
  auto m = PolyMatrix::parse(r, {{"x", "y"}});
  m.row_degrees = {{0, 0}};
  m.col_degrees = {{1, 0}, {0, 1}};
  CHECK_FALSE(m.degree_violation().has_value());
  m.col_degrees = {{1, 0}, {1, 0}};
  REQUIRE(m.degree_violation().has_value());
  CHECK(m.degree_violation()->second == 1);
}

TEST_CASE("minors") {
  auto r = make_ring({"x", "y", "z", "u", "v", "w"}, Field::rationals());
  auto row = PolyMatrix::parse(r, {{"x", "y", "z"}});
  CHECK(minors_ideal(row, 1) == std::vector<Poly>{P(r, "x"), P(r, "y"), P(r, "z")});
  auto g = PolyMatrix::parse(r, {{"x", "y", "z"}, {"u", "v", "w"}});
  auto m2 = minors_ideal(g, 2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0] == P(r, "x*v-y*u"));
  CHECK(m2[1] == P(r, "x*w-z*u"));
  CHECK(m2[2] == P(r, "y*w-z*v"));
  CHECK(minors_ideal(g, 0) == std::vector<Poly>{P(r, "1")});
  CHECK(minors_ideal(g, 3).empty());
  CHECK(combinations(4, 2).size() == 6);
  CHECK(combinations(4, 2)[1] == std::vector<int>{0, 2});
}

TEST_CASE("determinant agrees with leibniz") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto r = abc(f);
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 4; ++t) {
        auto m = random_matrix(r, n, n, rng);
        CHECK(determinant(m) == leibniz(m));
      }
  }
}

TEST_CASE("bareiss path on a large sparse matrix") {
  auto r = abc();
  int n = 16;
  PolyMatrix m(r, n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = P(r, "a");
    if (i + 1 < n) m.at(i, i + 1) = P(r, "b");
  }
  m.at(n - 1, 0) = P(r, "c");
  // Expansion along the last row: a^16 + (-1)^(n+1) c * b^(15).
  Poly expected = P(r, "a").pow(16) - P(r, "c") * P(r, "b").pow(15);
  CHECK(determinant(m) == expected);
}

TEST_CASE("pfaffians") {
  auto r = abc();
  auto two = PolyMatrix::parse(r, {{"0", "a"}, {"-a", "0"}});
  CHECK(pfaffian(two) == P(r, "a"));
  CHECK(pfaffian(two, {}) == P(r, "1"));
  auto four = PolyMatrix::parse(r, {{"0", "a", "b", "c"}, {"-a", "0", "d", "e"}, {"-b", "-d", "0", "f"}, {"-c", "-e", "-f", "0"}});
  CHECK(pfaffian(four) == P(r, "a*f-b*e+c*d"));
  CHECK_THROWS_AS(pfaffian(PolyMatrix::parse(r, {{"0", "a"}, {"a", "0"}})), NotAlternating);
  CHECK_THROWS_AS(pfaffian(four, {0, 1, 2}), NotAlternating);
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 6; n += 2)
    for (int t = 0; t < 5; ++t) {
      auto m = random_alternating(r, n, rng);
      Poly pf = pfaffian(m);
      CHECK(pf * pf == leibniz(m));
    }
}

TEST_CASE("adjugate") {
  auto r = abc();
  auto m = PolyMatrix::parse(r, {{"a", "b"}, {"c", "d"}});
  CHECK(adjugate(m) == PolyMatrix::parse(r, {{"d", "-b"}, {"-c", "a"}}));
  CHECK(adjugate(PolyMatrix::identity(r, 3)) == PolyMatrix::identity(r, 3));
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 4; ++n) {
    auto x = random_matrix(r, n, n, rng);
    PolyMatrix d(r, n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = leibniz(x);
    CHECK(x * adjugate(x) == d);
    CHECK(adjugate(x) * x == d);
  }
}

TEST_CASE("generic rank") {
  auto r = abc();
  CHECK(generic_rank(PolyMatrix(r, 3, 3)) == 0);
  auto g = PolyMatrix::parse(r, {{"a", "b", "c"}, {"d", "e", "f"}, {"a+d", "b+e", "c+f"}});
  CHECK(generic_rank(g) == 2);
  // Invariance under unimodular row and column operations.
  auto u = PolyMatrix::parse(r, {{"1", "a", "0"}, {"0", "1", "0"}, {"b", "a*b", "1"}});
  CHECK(generic_rank(u * g * u.transpose()) == 2);
  auto rp = abc(Field::prime(101));
  std::mt19937_64 rng(5);
  auto m = random_matrix(rp, 4, 4, rng);
  CHECK(generic_rank(m.columns(0, 2) * m.columns(0, 2).transpose()) == 2);
}

TEST_CASE("exterior powers and cauchy-binet") {
  auto r = abc();
  std::mt19937_64 rng(8);
  auto m = random_matrix(r, 3, 3, rng);
  CHECK(exterior_power(m, 1) == m);
  auto m2 = random_matrix(r, 2, 2, rng);
  auto e = exterior_power(m2, 2);
  CHECK(e.rows() == 1);
  CHECK(e.at(0, 0) == determinant(m2));
  for (int t = 0; t < 5; ++t) {
    auto a = random_matrix(r, 3, 3, rng), b = random_matrix(r, 3, 3, rng);
    CHECK(exterior_power(a * b, 2) == exterior_power(a, 2) * exterior_power(b, 2));
  }
  auto a = random_matrix(r, 3, 4, rng), b = random_matrix(r, 4, 3, rng);
  CHECK(exterior_power(a * b, 2) == exterior_power(a, 2) * exterior_power(b, 2));
}
