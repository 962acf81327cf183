#include "resfold/dga.hpp"

#include "resfold/determinantal.hpp"
#include "resfold/generators.hpp"

namespace resfold {

int pair_index(int n, int i, int j) {
  // Pairs (0,1) ... (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

PolyVec wedge_product(const MultiplicationStructure& m, int r1, int i, int j) {
  if (i == j) return PolyVec(m.m11.rows(), Poly(m.m11.ring()));
  if (i < j) return m.m11.column(pair_index(r1, i, j));
  PolyVec v = m.m11.column(pair_index(r1, j, i));
  for (auto& p : v) p = -p;
  return v;
}

namespace {

void check_format(const FreeComplex& a) {
  if (a.length() != 3 || a.ranks[0] != 1) throw Error("multiplication needs a length three complex with A_0 = R");
}

PolyVec unit_vector(const RingPtr& ring, int n, int k, const Poly& c) {
  PolyVec v(n, Poly(ring));
  v[k] = c;
  return v;
}

// d_1(e) f + m11(d_2(f) ^ e), in A_2.
PolyVec leibniz_target(const FreeComplex& a, const MultiplicationStructure& m, int e, int f) {
  const RingPtr& ring = a.ring;
  int r1 = a.ranks[1], r2 = a.ranks[2];
  PolyVec v = unit_vector(ring, r2, f, a.diff(1).at(0, e));
  for (int k = 0; k < r1; ++k) {
    const Poly& c = a.diff(2).at(k, f);
    if (c.is_zero() || k == e) continue;
    v = v + scale(wedge_product(m, r1, k, e), c);
  }
  return v;
}

PolyVec wedge_target(const FreeComplex& a, int i, int j) {
  int r1 = a.ranks[1];
  PolyVec v(r1, Poly(a.ring));
  v[j] = a.diff(1).at(0, i);
  v[i] = -a.diff(1).at(0, j);
  return v;
}

}  // namespace

MultiplicationStructure build_multiplication(const FreeComplex& a) {
  check_format(a);
  const RingPtr& ring = a.ring;
  int r1 = a.ranks[1], r2 = a.ranks[2], r3 = a.ranks[3];
  MultiplicationStructure m;
  auto pairs = combinations(r1, 2);
  m.m11 = PolyMatrix(ring, r2, static_cast<int>(pairs.size()));
  Lifter through2(a.diff(2));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto x = through2.try_lift(wedge_target(a, pairs[c][0], pairs[c][1]));
    if (!x) throw LiftFailed("no lift for e_" + std::to_string(pairs[c][0] + 1) + " ^ e_" + std::to_string(pairs[c][1] + 1));
    m.m11.set_column(static_cast<int>(c), *x);
  }
  m.m12 = PolyMatrix(ring, r3, r1 * r2);
  Lifter through3(a.diff(3));
  for (int e = 0; e < r1; ++e)
    for (int f = 0; f < r2; ++f) {
      auto x = through3.try_lift(leibniz_target(a, m, e, f));
      if (!x) throw LiftFailed("no lift for e_" + std::to_string(e + 1) + " . f_" + std::to_string(f + 1));
      m.m12.set_column(e * r2 + f, *x);
    }
  auto rep = verify_multiplication(a, m);
  if (!rep.ok) throw Error("internal error: " + rep.failure);
  return m;
}

BMap zero_bmap(RingPtr ring, int p, int q) {
  return {PolyMatrix(ring, q - 1, (p + 2) * (p + 1) / 2)};
}

MultiplicationStructure split_multiplication(RingPtr ring, int p, int q, const BMap& b) {
  FreeComplex a = split_A(ring, p, q);
  int r1 = p + 2, r2 = p + q, r3 = q - 1, nm = p + 1;
  if (b.b.rows() != r3 || b.b.cols() != r1 * (r1 - 1) / 2) throw DimensionMismatch("b must be (q-1) x C(p+2,2)");
  auto one = Poly::constant(ring, 1);
  MultiplicationStructure m;
  m.m11 = PolyMatrix(ring, r2, r1 * (r1 - 1) / 2);
  // r . m_i = m_i, with r = e_0 in A_1 and m_i after A_3 in A_2.
  for (int i = 0; i < nm; ++i) m.m11.at(r3 + i, pair_index(r1, 0, 1 + i)) = one;
  m.m12 = PolyMatrix(ring, r3, r1 * r2);
  for (int k = 0; k < r3; ++k) m.m12.at(k, 0 * r2 + k) = one;
  m.m11 = m.m11 + a.diff(3) * b.b;
  // e . f += b(d_2(f) ^ e).
  MultiplicationStructure bm{b.b, {}};
  for (int e = 0; e < r1; ++e)
    for (int f = 0; f < r2; ++f) {
      PolyVec add(r3, Poly(ring));
      for (int k = 0; k < r1; ++k) {
        const Poly& c = a.diff(2).at(k, f);
        if (!c.is_zero() && k != e) add = add + scale(wedge_product(bm, r1, k, e), c);
      }
      for (int k = 0; k < r3; ++k) m.m12.at(k, e * r2 + f) += add[k];
    }
  return m;
}

MultiplicationReport verify_multiplication(const FreeComplex& a, const MultiplicationStructure& m) {
  check_format(a);
  int r1 = a.ranks[1], r2 = a.ranks[2];
  MultiplicationReport rep;
  if (m.m11.rows() != r2 || m.m11.cols() != r1 * (r1 - 1) / 2 || m.m12.rows() != a.ranks[3] || m.m12.cols() != r1 * r2) {
    rep.ok = false;
    rep.failure = "product matrices have the wrong shape";
    return rep;
  }
  for (int i = 0; i < r1; ++i)
    for (int j = i + 1; j < r1; ++j)
      if (a.diff(2).apply(m.m11.column(pair_index(r1, i, j))) != wedge_target(a, i, j)) {
        rep = {false, "d_2(e_" + std::to_string(i + 1) + " . e_" + std::to_string(j + 1) + ") is wrong", 11, i, j};
        return rep;
      }
  for (int e = 0; e < r1; ++e)
    for (int f = 0; f < r2; ++f)
      if (a.diff(3).apply(m.m12.column(e * r2 + f)) != leibniz_target(a, m, e, f)) {
        rep = {false, "d_3(e_" + std::to_string(e + 1) + " . f_" + std::to_string(f + 1) + ") is wrong", 12, e, f};
        return rep;
      }
  return rep;
}

}  // namespace resfold
