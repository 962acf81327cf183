#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "resfold/complex.hpp"
#include "resfold/frame.hpp"

namespace resfold {

class WrongComponent : public Error {
 public:
  WrongComponent() : Error("image lies in the same component as H^*") {}
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class NotInCell : public Error {
 public:
  NotInCell() : Error("summand is not the graph of a map H^* -> H") {}
};

/// Subsets of {1..n} are bit masks, bit i standing for index i+1.
using Subset = std::uint32_t;

/// Subsets of the given parity ordered by size, then lexicographically.
std::vector<Subset> spinor_basis(int n, int parity);
std::vector<int> subset_indices(Subset s);  // 1-based, sorted
std::string subset_name(Subset s);

/// Element of wedge^even H or wedge^odd H, coefficient of e_I per subset I.
struct SpinorVector {
  int n = 0;
  int parity = 1;
  std::map<Subset, Poly> coeffs;  // zero coefficients omitted

  Poly at(Subset s, const RingPtr& ring) const;
  bool is_zero() const { return coeffs.empty(); }
};

/// Isotropy of the column span of delta_3 (B_2 coordinates).
bool isotropy_check(const PolyMatrix& delta3, const HyperbolicFrame& frame);

/// Rows of the frame coordinates: 0..n-1 are e_i, n..2n-1 are e'_i.
/// A row set is a mask over these 2n rows.
struct PlueckerData {
  int n = 0;
  std::vector<int> columns;  // the column subset T_0 of delta_3
  std::map<std::uint32_t, Poly> coords;
};

/// coords(S) = minor(S, T_0) over content, for the given row sets (all
/// n-subsets of the 2n rows when empty).
PlueckerData plucker_of_image(const PolyMatrix& delta3, const HyperbolicFrame& frame,
                              std::vector<std::uint32_t> row_sets = {}, std::uint64_t seed = 1);

/// Row set whose Pluecker coordinate is +-lambda_I lambda_J when I and J
/// differ in at most two indices: H-rows (I meet J) and H^*-rows outside
/// I union J, plus both rows of the smallest index of I xor J.
std::uint32_t plucker_rows(int n, Subset i, Subset j);

enum class Component { same_as_Hstar, opposite };

Component component_test(const PolyMatrix& m, const HyperbolicFrame& frame, std::uint64_t seed = 1);

/// Spinor coordinates of the image of delta_3, in wedge^odd H.
/// Normalized so the first nonzero coordinate is a sign-normalized square root.
SpinorVector spinor_coordinates(const PolyMatrix& delta3, const HyperbolicFrame& frame, std::uint64_t seed = 1);

/// x . v with x = sum a_i e_i + b_i e'_i given in frame coordinates.
SpinorVector clifford_action(const SpinorVector& v, const PolyVec& x);

/// The map x -> x . lambda, dualized through the form: column K (even
/// subsets, spinor_basis order) is the vector of B_2 pairing with x to give
/// the e_K coefficient of x . lambda.
PolyMatrix diagonal_map(const HyperbolicFrame& frame, const SpinorVector& lambda);

/// Lift of the diagonal map through delta_3; throws NoLift.
PolyMatrix build_w(const FreeComplex& b, const HyperbolicFrame& frame, const SpinorVector& lambda);

struct SingletonUnitReport {
  bool projection_unit = false;  // I_{n-1}(P) = (1)
  bool lambda_unit = false;      // lambda(H^*) = (1)
  bool agree() const { return projection_unit == lambda_unit; }
};

SingletonUnitReport singleton_unit_test(const PolyMatrix& m, const HyperbolicFrame& frame);

/// phi : H^* -> H alternating with the columns of m spanning {phi(y) + y}.
PolyMatrix big_cell_graph(const PolyMatrix& m, const HyperbolicFrame& frame);

/// Root subgroup moves on a frame, with their action on lambda.
struct FrameMove {
  enum Kind { sl, rotation, double_swap, swap } kind = sl;
  int i = 0, j = 1;  // 0-based
  Scalar alpha = 1;
};

/// New frame and the spinor coordinates of the same summand in it.
/// `swap` exchanges e_i and e'_i and changes the parity of lambda; it is
/// applied to the frame only (lambda must be recomputed).
HyperbolicFrame move_frame(const HyperbolicFrame& frame, const FrameMove& m);
SpinorVector move_spinor(const SpinorVector& lambda, const FrameMove& m);

}  // namespace resfold
