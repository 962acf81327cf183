#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resfold/field.hpp"

namespace resfold {

inline constexpr int kMaxVars = 32;
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable. Exponents stay below 128
/// so that packed divisibility tests cannot borrow across bytes.
struct Monomial {
  std::array<std::uint64_t, kMaxVars / 8> words{};
  std::uint32_t degree = 0;

  int exp(int var) const {
    return static_cast<int>((words[var >> 3] >> ((var & 7) * 8)) & 0xff);
  }
  void set_exp(int var, int e);

  bool operator==(const Monomial& o) const { return words == o.words; }
  bool operator!=(const Monomial& o) const { return words != o.words; }

  bool is_one() const { return degree == 0; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires divides(b, a).
Monomial operator/(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Degree-reverse-lexicographic comparison; returns -1, 0 or 1.
int grevlex_cmp(const Monomial& a, const Monomial& b);
int lex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Polynomial ring over an exact field with named variables and an
/// optional multigrading (one integer vector per variable).
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, Field field,
           std::vector<std::vector<int>> multidegrees = {});

  const std::vector<std::string>& variables() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const Field& field() const { return field_; }
  const std::vector<std::vector<int>>& multidegrees() const { return multideg_; }
  bool graded() const { return !multideg_.empty(); }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  bool same_as(const PolyRing& o) const {
    return this == &o || (field_ == o.field_ && vars_ == o.vars_ && multideg_ == o.multideg_);
  }

 private:
  std::vector<std::string> vars_;
  Field field_;
  std::vector<std::vector<int>> multideg_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables, Field field,
                  std::vector<std::vector<int>> multidegrees = {});

struct Term {
  Monomial mono;
  Scalar coeff;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not divisible") {}
};

class NotASquare : public Error {
 public:
  NotASquare() : Error("polynomial is not a perfect square") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Sparse distributed polynomial. Terms are kept strictly decreasing in
/// grevlex order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, int var);
  static Poly term(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  static Poly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value; requires is_constant().
  Scalar constant_value() const;

  const Term& lead() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  /// Multidegree if the polynomial is multihomogeneous for the ring grading.
  std::optional<std::vector<int>> multidegree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Scalar& c) const;
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(int e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Substitutes constants for the variables present in the map.
  Poly specialize(const std::map<int, Scalar>& assignment) const;
  /// Ring homomorphism sending variable i to images[i].
  Poly substitute(std::span<const Poly> images) const;
  Poly derivative(int var) const;
  /// Coefficients in one variable, index = power.
  std::vector<Poly> coefficients_in(int var) const;
  /// Re-expresses the polynomial in another ring with var i -> var map[i].
  Poly embed(RingPtr target, std::span<const int> var_map) const;

  /// Divide by the leading coefficient (zero stays zero).
  Poly monic() const;
  /// Rationals: clear denominators, remove integer content, positive lead.
  /// Prime fields: monic.
  Poly primitive() const;
  /// Scalar c with *this == primitive() * c (1 for zero).
  Scalar content() const;

  std::string to_string() const;

 private:
  friend Poly combine(const Poly&, const Poly&, bool);
  RingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Poly& a, const Poly& b);

/// q with f == q * g; throws NotDivisible.
Poly exact_divide(const Poly& f, const Poly& g);
std::optional<Poly> try_divide(const Poly& f, const Poly& g);
/// Monic-normalized (primitive over QQ) greatest common divisor.
Poly gcd(const Poly& f, const Poly& g);
/// g with g*g == f and sign-normalized leading coefficient; throws NotASquare.
Poly perfect_square_root(const Poly& f);

}  // namespace resfold
