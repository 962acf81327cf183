#include "resfold/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace resfold {

namespace {

constexpr std::uint64_t kHigh = 0x8080808080808080ull;

}  // namespace

// ---------------------------------------------------------------- Monomial

void Monomial::set_exp(int var, int e) {
  if (e < 0 || e > kMaxExponent) throw Error("exponent out of range");
  int shift = (var & 7) * 8;
  std::uint64_t& w = words[var >> 3];
  int old = static_cast<int>((w >> shift) & 0xff);
  w = (w & ~(0xffull << shift)) | (static_cast<std::uint64_t>(e) << shift);
  degree = degree - old + e;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (int v = 0; v < kMaxVars; ++v)
    if (exp(v)) mask |= 1u << v;
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    r.words[i] = a.words[i] + b.words[i];
    if (r.words[i] & kHigh) throw Error("exponent overflow");
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.words.size(); ++i) r.words[i] = a.words[i] - b.words[i];
  r.degree = a.degree - b.degree;
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < a.words.size(); ++i)
    if ((((b.words[i] | kHigh) - a.words[i]) & kHigh) != kHigh) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    std::uint64_t ge = ((a.words[i] | kHigh) - b.words[i]) & kHigh;
    std::uint64_t mask = (ge >> 7) * 0xff;
    r.words[i] = (a.words[i] & mask) | (b.words[i] & ~mask);
  }
  for (int v = 0; v < kMaxVars; ++v) deg += r.exp(v);
  r.degree = deg;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  // A byte is nonzero iff some bit is set; fold bytes to their low bit.
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    auto fold = [](std::uint64_t w) {
      w |= w >> 4;
      w |= w >> 2;
      w |= w >> 1;
      return w & 0x0101010101010101ull;
    };
    if (fold(a.words[i]) & fold(b.words[i])) return false;
  }
  return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (int i = static_cast<int>(a.words.size()) - 1; i >= 0; --i) {
    std::uint64_t diff = a.words[i] ^ b.words[i];
    if (diff) {
      int byte = (63 - __builtin_clzll(diff)) / 8;
      int ea = static_cast<int>((a.words[i] >> (byte * 8)) & 0xff);
      int eb = static_cast<int>((b.words[i] >> (byte * 8)) & 0xff);
      return ea < eb ? 1 : -1;
    }
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    std::uint64_t diff = a.words[i] ^ b.words[i];
    if (diff) {
      int byte = __builtin_ctzll(diff) / 8;
      int ea = static_cast<int>((a.words[i] >> (byte * 8)) & 0xff);
      int eb = static_cast<int>((b.words[i] >> (byte * 8)) & 0xff);
      return ea > eb ? 1 : -1;
    }
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : m.words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> variables, Field field,
                   std::vector<std::vector<int>> multidegrees)
    : vars_(std::move(variables)), field_(field), multideg_(std::move(multidegrees)) {
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw Error("invalid variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw Error("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j] == v) throw Error("duplicate variable '" + v + "'");
  }
  if (!multideg_.empty()) {
    if (multideg_.size() != vars_.size()) throw Error("one multidegree per variable required");
    for (const auto& d : multideg_)
      if (d.size() != multideg_[0].size()) throw Error("multidegrees must share one length");
  }
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> variables, Field field,
                  std::vector<std::vector<int>> multidegrees) {
  return std::make_shared<const PolyRing>(std::move(variables), field, std::move(multidegrees));
}

// ---------------------------------------------------------------- Poly

void check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring())) throw RingMismatch();
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(std::move(ring));
  Scalar v = p.field().reduce(c);
  if (v != 0) p.terms_.push_back({Monomial{}, v});
  return p;
}

Poly Poly::variable(RingPtr ring, int var) {
  if (var < 0 || var >= ring->nvars()) throw Error("variable index out of range");
  Monomial m;
  m.set_exp(var, 1);
  return term(std::move(ring), m, 1);
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Poly p(std::move(ring));
  Scalar v = p.field().reduce(c);
  if (v != 0) p.terms_.push_back({m, v});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& f = ring->field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  Poly p(std::move(ring));
  for (auto& t : terms) {
    Scalar c = f.reduce(t.coeff);
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, std::move(c)});
    }
  }
  return p;
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_[0].mono.is_one() || terms_.size() != 1) throw Error("polynomial is not constant");
  return terms_[0].coeff;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.mono.degree));
  return d;
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_[0].mono.degree) return false;
  return true;
}

std::optional<std::vector<int>> Poly::multidegree() const {
  if (!ring_->graded()) return std::nullopt;
  std::size_t len = ring_->multidegrees()[0].size();
  std::optional<std::vector<int>> first;
  for (const auto& t : terms_) {
    std::vector<int> d(len, 0);
    for (int v = 0; v < ring_->nvars(); ++v)
      for (std::size_t k = 0; k < len; ++k) d[k] += t.mono.exp(v) * ring_->multidegrees()[v][k];
    if (!first)
      first = d;
    else if (*first != d)
      return std::nullopt;
  }
  if (!first) return std::nullopt;
  return first;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
  return r;
}

Poly combine(const Poly& a, const Poly& b, bool subtract) {
  check_same_ring(a, b);
  const Field& f = a.field();
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size())
      c = -1;
    else if (j == b.terms_.size())
      c = 1;
    else
      c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      const Term& t = b.terms_[j++];
      r.terms_.push_back({t.mono, subtract ? f.neg(t.coeff) : t.coeff});
    } else {
      Scalar s = subtract ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                          : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const { return combine(*this, o, false); }
Poly Poly::operator-(const Poly& o) const { return combine(*this, o, true); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  const Field& f = field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, inserted] = acc.try_emplace(m, 0);
      it->second = f.add(it->second, f.mul(a.coeff, b.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return grevlex_cmp(x.mono, y.mono) > 0; });
  Poly r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::scaled(const Scalar& c) const { return mul_term(Monomial{}, field().reduce(c)); }

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative exponent");
  Poly result = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  const Field& f = field();
  int n = ring_->nvars();
  if (static_cast<int>(point.size()) < n) throw Error("evaluation point too short");
  std::vector<std::vector<Scalar>> powers(n);
  Scalar total = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int var = 0; var < n; ++var) {
      int e = t.mono.exp(var);
      if (!e) continue;
      auto& pw = powers[var];
      if (pw.empty()) pw.push_back(1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(f.mul(pw.back(), f.reduce(point[var])));
      v = f.mul(v, pw[e]);
    }
    total = f.add(total, v);
  }
  return total;
}

Poly Poly::specialize(const std::map<int, Scalar>& assignment) const {
  const Field& f = field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Scalar c = t.coeff;
    for (const auto& [var, val] : assignment) {
      int e = m.exp(var);
      if (!e) continue;
      Scalar pv = 1, rv = f.reduce(val);
      for (int k = 0; k < e; ++k) pv = f.mul(pv, rv);
      c = f.mul(c, pv);
      m.set_exp(var, 0);
    }
    out.push_back({m, c});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::span<const Poly> images) const {
  Poly total(images.empty() ? ring_ : images[0].ring());
  RingPtr target = total.ring();
  int n = ring_->nvars();
  std::vector<std::vector<Poly>> powers(n);
  for (const auto& t : terms_) {
    Poly v = constant(target, t.coeff);
    for (int var = 0; var < n; ++var) {
      int e = t.mono.exp(var);
      if (!e) continue;
      auto& pw = powers[var];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[var]);
      v *= pw[e];
    }
    total += v;
  }
  return total;
}

Poly Poly::derivative(int var) const {
  const Field& f = field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.exp(var);
    if (!e) continue;
    Monomial m = t.mono;
    m.set_exp(var, e - 1);
    out.push_back({m, f.mul(t.coeff, f.from_int(e))});
  }
  return from_terms(ring_, std::move(out));
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  int d = degree_in(var);
  std::vector<std::vector<Term>> parts(std::max(d + 1, 0));
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exp(var);
    m.set_exp(var, 0);
    parts[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    // Removing one variable keeps grevlex order among the remaining terms
    // only within equal exponent classes, so re-sort.
    out.push_back(from_terms(ring_, std::move(p)));
  }
  return out;
}

Poly Poly::embed(RingPtr target, std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int v = 0; v < ring_->nvars(); ++v)
      if (int e = t.mono.exp(v)) m.set_exp(var_map[v], e);
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead().coeff));
}

Scalar Poly::content() const {
  if (is_zero()) return 1;
  if (!field().is_rational()) return lead().coeff;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Scalar c(g, l);
  c.canonicalize();
  if (lead().coeff < 0) c = -c;
  return c;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  return scaled(field().inv(content()));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (int v = 0; v < ring_->nvars(); ++v) {
      int e = t.mono.exp(v);
      if (!e) continue;
      if (wrote) os << '*';
      os << ring_->variables()[v];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->field().inv(d.constant_value()));
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(ring_, Scalar(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(ring_, idx);
    }
    fail("unexpected character");
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).parse(); }

// ---------------------------------------------------------------- division, gcd, sqrt

std::optional<Poly> try_divide(const Poly& f, const Poly& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw Error("division by zero polynomial");
  const Field& fld = f.field();
  const Term& lg = g.lead();
  Scalar inv_lc = fld.inv(lg.coeff);
  std::vector<Term> q;
  Poly r = f;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!divides(lg.mono, lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lg.mono;
    Scalar c = fld.mul(lr.coeff, inv_lc);
    q.push_back({m, c});
    r -= g.mul_term(m, c);
  }
  // Quotient terms were produced in strictly decreasing order.
  Poly out(f.ring());
  return Poly::from_terms(f.ring(), std::move(q));
}

Poly exact_divide(const Poly& f, const Poly& g) {
  auto q = try_divide(f, g);
  if (!q) throw NotDivisible();
  return *q;
}

namespace {

Poly gcd_rec(const Poly& f, const Poly& g);

Poly content_in(const Poly& f, int var) {
  auto coeffs = f.coefficients_in(var);
  Poly g(f.ring());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return Poly::constant(f.ring(), 1);
  }
  return g;
}

Poly pseudo_remainder(Poly a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lb = b.coefficients_in(var).back();
  Monomial xv;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Poly la = a.coefficients_in(var).back();
    Monomial shift;
    shift.set_exp(var, da - db);
    a = a * lb - (la * b).mul_term(shift, 1);
  }
  return a;
}

Poly primitive_part_in(const Poly& f, int var) {
  Poly c = content_in(f, var);
  if (c.is_constant()) return f;
  return exact_divide(f, c);
}

Poly gcd_rec(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly::constant(f.ring(), 1);
  if (try_divide(f, g)) return g.monic();
  if (try_divide(g, f)) return f.monic();
  int n = f.ring()->nvars();
  // A variable occurring in only one argument reduces to a content gcd.
  for (int v = 0; v < n; ++v) {
    int df = f.degree_in(v), dg = g.degree_in(v);
    if (df > 0 && dg <= 0) return gcd_rec(content_in(f, v), g);
    if (dg > 0 && df <= 0) return gcd_rec(f, content_in(g, v));
  }
  int best = -1, best_deg = 1 << 30;
  for (int v = 0; v < n; ++v) {
    int d = std::max(f.degree_in(v), g.degree_in(v));
    if (d > 0 && d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  int v = best;
  Poly cf = content_in(f, v), cg = content_in(g, v);
  Poly c = gcd_rec(cf, cg);
  Poly a = cf.is_constant() ? f : exact_divide(f, cf);
  Poly b = cg.is_constant() ? g : exact_divide(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    Poly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      b = Poly::constant(f.ring(), 1);
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(b, v)).monic();
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  check_same_ring(f, g);
  return gcd_rec(f, g);
}

Poly perfect_square_root(const Poly& f) {
  if (f.is_zero()) return f;
  const Field& fld = f.field();
  const Term& lt = f.lead();
  Monomial m0;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = lt.mono.exp(v);
    if (e % 2) throw NotASquare();
    if (e) m0.set_exp(v, e / 2);
  }
  auto c0 = fld.sqrt(lt.coeff);
  if (!c0) throw NotASquare();
  Poly root = Poly::term(f.ring(), m0, *c0);
  Scalar inv_two_c0 = fld.inv(fld.mul(fld.from_int(2), *c0));
  Poly rem = f - root * root;
  Monomial last = m0;
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    if (!divides(m0, lr.mono)) throw NotASquare();
    Monomial m = lr.mono / m0;
    if (grevlex_cmp(m, last) >= 0) throw NotASquare();
    Poly t = Poly::term(f.ring(), m, fld.mul(lr.coeff, inv_two_c0));
    rem -= t * (root.scaled(2) + t);
    root += t;
    last = m;
  }
  if (!fld.is_sign_normalized(root.lead().coeff)) root = -root;
  return root;
}

}  // namespace resfold
