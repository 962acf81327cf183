#include "resfold/field.hpp"

#include <cctype>

namespace resfold {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 31))
    throw Error("field characteristic must be an odd prime below 2^31, got " +
                std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "QQ" || t == "q" || t == "Q") return rationals();
  std::string digits;
  if (t.rfind("GF(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (t.rfind("fp:", 0) == 0)
    digits = t.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error("unrecognized field '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::reduce(const Scalar& a) const {
  if (p_ == 0) return a;
  mpz_class m(p_);
  mpz_class num = a.get_num() % m;
  mpz_class den = a.get_den() % m;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = num * inv % m;
  if (r < 0) r += m;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t r = a.get_num().get_ui() + b.get_num().get_ui();
  if (r >= p_) r -= p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  std::uint64_t r = a.get_num().get_ui() * b.get_num().get_ui() % p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = a.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return 1 / a;
  return Scalar(static_cast<unsigned long>(powmod(a.get_num().get_ui(), p_ - 2, p_)));
}

std::optional<Scalar> Field::sqrt(const Scalar& a) const {
  if (a == 0) return Scalar(0);
  if (p_ == 0) {
    if (a < 0) return std::nullopt;
    mpz_class n = a.get_num(), d = a.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(rn, rd);
  }
  std::uint64_t x = a.get_num().get_ui();
  if (powmod(x, (p_ - 1) / 2, p_) != 1) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, p_), t = powmod(x, q, p_),
                r = powmod(x, (q + 1) / 2, p_);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p_;
      ++i;
    }
    std::uint64_t b = powmod(c, 1ull << (m - i - 1), p_);
    m = i;
    c = b * b % p_;
    t = t * c % p_;
    r = r * b % p_;
  }
  Scalar root(static_cast<unsigned long>(r));
  return is_sign_normalized(root) ? root : neg(root);
}

bool Field::is_sign_normalized(const Scalar& a) const {
  if (p_ == 0) return a > 0;
  std::uint64_t x = a.get_num().get_ui();
  return x >= 1 && x <= (p_ - 1) / 2;
}

Scalar Field::random(std::mt19937_64& rng, long bound, bool nonzero) const {
  if (p_ == 0) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
      long v = d(rng);
      if (!nonzero || v != 0) return Scalar(v);
    }
  }
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, p_ - 1);
  return Scalar(static_cast<unsigned long>(d(rng)));
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

}  // namespace resfold
