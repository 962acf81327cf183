#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "resfold/matrix.hpp"

namespace resfold {

enum class OrderKind { grevlex, lex, block };

/// Term order. `block` compares variables [0, split) by grevlex first and
/// breaks ties by grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int split = 0;

  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

class NotMember : public Error {
 public:
  NotMember() : Error("element is not in the ideal") {}
};

class NoLift : public Error {
 public:
  NoLift() : Error("vector is not in the column span of the matrix") {}
};

inline constexpr int kInfiniteGrade = INT_MAX;

/// Reduced Groebner basis of an ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> gens, MonomialOrder order)
      : ring_(std::move(ring)), gens_(std::move(gens)), order_(order) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;  // monic, sorted by ascending leading term
  MonomialOrder order_;
};

/// Leading monomial of a nonzero polynomial under the given order.
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Poly>& gens, MonomialOrder order = {});

/// Coefficients c with f = sum c_i gens_i; throws NotMember.
std::vector<Poly> membership_with_certificate(const Poly& f, const std::vector<Poly>& gens);

/// Precomputed lifting data for a fixed matrix M.
class Lifter {
 public:
  explicit Lifter(const PolyMatrix& m);

  const PolyMatrix& matrix() const { return m_; }
  /// x with M x = v, or nullopt.
  std::optional<PolyVec> try_lift(const PolyVec& v) const;
  /// Throws NoLift.
  PolyVec lift(const PolyVec& v) const;
  /// Generators of ker M.
  PolyMatrix syzygies() const;

 private:
  struct Impl;
  PolyMatrix m_;
  std::shared_ptr<const Impl> impl_;
};

PolyVec lift_through_matrix(const PolyVec& v, const PolyMatrix& m);
PolyMatrix syzygy_generators(const PolyMatrix& m);

/// Height of the ideal; kInfiniteGrade for the unit ideal, 0 for the zero ideal.
int codimension(RingPtr ring, const std::vector<Poly>& gens);
/// Smallest number of variables meeting every support; helper exposed for tests.
int min_hitting_set(std::vector<std::uint32_t> supports);

bool ideal_equal(RingPtr ring, const std::vector<Poly>& a, const std::vector<Poly>& b);
bool radical_membership(const Poly& f, const std::vector<Poly>& gens);

}  // namespace resfold
