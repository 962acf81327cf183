#pragma once

#include "resfold/complex.hpp"

namespace resfold {

class LiftFailed : public Error {
 public:
  using Error::Error;
};

/// Products on a length three resolution with A_0 = R.
/// m11: columns are pairs i < j of A_1 (lexicographic), values in A_2.
/// m12: column e * rank(A_2) + f holds e . f in A_3.
struct MultiplicationStructure {
  PolyMatrix m11;
  PolyMatrix m12;
};

/// b : wedge^2 A_1 -> A_3, columns as in m11.
struct BMap {
  PolyMatrix b;
};

/// Index of e_i ^ e_j (i < j) among the pairs of {0..n-1}.
int pair_index(int n, int i, int j);

/// m11(e_i ^ e_j) for any i, j (antisymmetric, zero on the diagonal).
PolyVec wedge_product(const MultiplicationStructure& m, int r1, int i, int j);

MultiplicationStructure build_multiplication(const FreeComplex& a);

/// Canonical products on split_A(ring, p, q) corrected by b.
MultiplicationStructure split_multiplication(RingPtr ring, int p, int q, const BMap& b);
BMap zero_bmap(RingPtr ring, int p, int q);

struct MultiplicationReport {
  bool ok = true;
  std::string failure;  // first failing identity, empty when ok
  // Which identity failed (11 or 12) and the basis pair involved.
  int which = 0, i = -1, j = -1;
};

MultiplicationReport verify_multiplication(const FreeComplex& a, const MultiplicationStructure& m);

}  // namespace resfold
