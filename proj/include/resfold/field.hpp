#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace resfold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

using Scalar = mpq_class;

/// Exact coefficient field: the rationals or F_p for an odd prime p.
/// Elements of F_p are stored as integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Parses "QQ", "q", "GF(p)" or "fp:p".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  Scalar reduce(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Square root in the field, if one exists.
  std::optional<Scalar> sqrt(const Scalar& a) const;
  /// True for the preferred element of {a, -a}: positive over QQ,
  /// in {1, ..., (p-1)/2} over F_p.
  bool is_sign_normalized(const Scalar& a) const;

  /// Uniform sample: {-bound..bound} (optionally without 0) over QQ,
  /// all of F_p (optionally nonzero) otherwise.
  Scalar random(std::mt19937_64& rng, long bound, bool nonzero) const;

  std::string format(const Scalar& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace resfold
