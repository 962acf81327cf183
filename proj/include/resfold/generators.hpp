#pragma once

#include "resfold/complex.hpp"
#include "resfold/frame.hpp"

namespace resfold {

/// Koszul complex on the given elements, exterior bases in lexicographic order.
FreeComplex koszul(RingPtr ring, const std::vector<Poly>& gens);

/// Ring QQ[x_1_1..x_n_n] graded by deg x_i_j = e_i + e_{n+j}.
RingPtr generic_matrix_ring(int n, Field field = Field::rationals());
/// The generic matrix X over that ring.
PolyMatrix generic_matrix(const RingPtr& ring, int n);

struct SelfDualExample {
  FreeComplex complex;
  SelfDualStructure structure;
  HyperbolicFrame frame;
};

/// Resolution of R/I_{n-1}(X). B_2 uses the pairs-of-matrices basis, upper
/// row then lower row; the default frame is H_0 = upper row.
SelfDualExample gn_complex(int n, Field field = Field::rationals());
/// The explicit n = 3 isotropic H with its complementary partners.
HyperbolicFrame gn_paper_H(const SelfDualExample& gn);

/// A_0 = R, A_1 = R + M, A_2 = A_3 + M, M = R^{p+1}.
FreeComplex split_A(RingPtr ring, int p, int q);
/// Split self-dual complex with delta_3(m_1) = e_1 and
/// delta_3(m_i) = e'_i + phi(e'_i) for i >= 2. phi is n x n alternating,
/// n = p + 2; its first column is ignored.
SelfDualExample split_B(RingPtr ring, int p, int q, const PolyMatrix& phi);
SelfDualExample split_B(RingPtr ring, int p, int q);

/// Minimal free resolution of (x,y,z)^2 over QQ[x,y,z].
FreeComplex resolve_square_of_max_ideal();
/// Minimal free resolution of an ideal generated by homogeneous polynomials,
/// by iterated syzygies.
FreeComplex resolve_ideal(RingPtr ring, const std::vector<Poly>& gens);

/// Removes non-minimal columns of a homogeneous matrix, keeping earlier
/// columns of lowest degree first. `col_degree` gives each column's degree.
PolyMatrix prune_to_minimal(const PolyMatrix& m, const std::vector<int>& col_degree);

}  // namespace resfold
