#include "resfold/spinor.hpp"

#include <algorithm>
#include <random>

#include "resfold/determinantal.hpp"

namespace resfold {

namespace {

int below(Subset s, int i) { return __builtin_popcount(s & ((1u << i) - 1)); }

// e_i ^ e_K = sign e_{K+i}
int wedge_sign(Subset k, int i) { return (k >> i & 1) ? 0 : ((below(k, i) & 1) ? -1 : 1); }
// iota_i e_K = sign e_{K-i}
int contract_sign(Subset k, int i) { return (k >> i & 1) ? ((below(k, i) & 1) ? -1 : 1) : 0; }

void accumulate(std::map<Subset, Poly>& into, Subset s, const Poly& p) {
  if (p.is_zero()) return;
  auto it = into.find(s);
  if (it == into.end()) {
    into.emplace(s, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) into.erase(it);
}

// Arithmetic mod a word-size prime for the numeric calibration.
struct Modp {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

Field numeric_field(const RingPtr& ring) {
  return ring->field().is_rational() ? Field::prime(32003) : ring->field();
}

std::uint64_t to_word(const Scalar& a, const Field& f) { return f.reduce(a).get_num().get_ui(); }

// Rows x cols over F_p, eliminated in place; returns the kernel basis.
std::vector<std::vector<std::uint64_t>> kernel_mod(std::vector<std::vector<std::uint64_t>> a, int cols, const Modp& f,
                                                   int* rank_out = nullptr) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(a.size()); ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    std::uint64_t s = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, s);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == r || !a[i][c]) continue;
      std::uint64_t t = a[i][c];
      for (int j = c; j < cols; ++j)
        if (a[r][j]) a[i][j] = f.add(a[i][j], f.neg(f.mul(t, a[r][j])));
    }
    pivots.push_back(c);
    ++r;
  }
  if (rank_out) *rank_out = r;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> ker;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = f.neg(a[i][free]);
    ker.push_back(v);
  }
  return ker;
}

struct NumericImage {
  std::vector<Scalar> point;
  std::vector<std::vector<std::uint64_t>> cols;  // frame coordinates, mod p
  int rank = 0;
};

NumericImage evaluate_image(const PolyMatrix& d, std::mt19937_64& rng, const Field& fp) {
  NumericImage out;
  out.point = random_point(*d.ring(), rng);
  ScalarMatrix v = evaluate(d, out.point);
  Modp f{fp.characteristic()};
  for (int c = 0; c < d.cols(); ++c) {
    std::vector<std::uint64_t> col(d.rows());
    for (int r = 0; r < d.rows(); ++r) col[r] = to_word(v.at(r, c), fp);
    out.cols.push_back(col);
  }
  if (!out.cols.empty()) {
    std::vector<std::vector<std::uint64_t>> rows(d.cols(), std::vector<std::uint64_t>(d.rows()));
    for (int c = 0; c < d.cols(); ++c) rows[c] = out.cols[c];
    kernel_mod(rows, d.rows(), f, &out.rank);
  }
  return out;
}

// Columns chosen greedily to be independent at the point.
std::vector<int> independent_columns(const NumericImage& im, const Modp& f) {
  std::vector<int> chosen;
  std::vector<std::vector<std::uint64_t>> rows;
  int rank = 0;
  for (int c = 0; c < static_cast<int>(im.cols.size()); ++c) {
    rows.push_back(im.cols[c]);
    int r = 0;
    kernel_mod(rows, static_cast<int>(im.cols[c].size()), f, &r);
    if (r > rank) {
      rank = r;
      chosen.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

// Kernel of v -> x . v on the given parity, for x running over the columns.
std::vector<std::vector<std::uint64_t>> annihilated(int n, int parity, const std::vector<std::vector<std::uint64_t>>& xs,
                                                    const Modp& f) {
  auto src = spinor_basis(n, parity);
  auto dst = spinor_basis(n, 1 - parity);
  std::map<Subset, int> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& x : xs) {
    std::vector<std::vector<std::uint64_t>> block(dst.size(), std::vector<std::uint64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      Subset k = src[c];
      for (int i = 0; i < n; ++i) {
        if (int s = wedge_sign(k, i); s && x[i]) {
          auto& e = block[dst_index.at(k | (1u << i))][c];
          e = f.add(e, s > 0 ? x[i] : f.neg(x[i]));
        }
        if (int s = contract_sign(k, i); s && x[n + i]) {
          auto& e = block[dst_index.at(k & ~(1u << i))][c];
          e = f.add(e, s > 0 ? x[n + i] : f.neg(x[n + i]));
        }
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return kernel_mod(rows, static_cast<int>(src.size()), f);
}

struct NumericSpinor {
  int parity;
  std::map<Subset, std::uint64_t> values;
};

std::optional<NumericSpinor> numeric_spinor(int n, const std::vector<std::vector<std::uint64_t>>& xs, const Modp& f) {
  for (int parity : {1, 0}) {
    auto ker = annihilated(n, parity, xs, f);
    if (ker.size() != 1) continue;
    NumericSpinor s{parity, {}};
    auto basis = spinor_basis(n, parity);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (ker[0][i]) s.values[basis[i]] = ker[0][i];
    return s;
  }
  return std::nullopt;
}

std::vector<int> rows_of(int n, std::uint32_t mask) {
  std::vector<int> rows;
  for (int r = 0; r < 2 * n; ++r)
    if (mask >> r & 1) rows.push_back(r);
  return rows;
}

std::uint32_t diagonal_rows(int n, Subset i) {
  Subset all = (1u << n) - 1;
  return i | ((all & ~i) << n);
}

std::uint64_t eval_word(const Poly& p, const std::vector<Scalar>& pt, const Field& fp) {
  return to_word(p.evaluate(pt), fp);
}

bool is_isotropic_frame(const PolyMatrix& d, int n) {
  // Q(v) = sum v_i v'_i, and <v, w> = sum v_i w'_i + w_i v'_i.
  for (int a = 0; a < d.cols(); ++a)
    for (int b = a; b < d.cols(); ++b) {
      Poly s(d.ring());
      for (int i = 0; i < n; ++i) {
        s += d.at(i, a) * d.at(n + i, b);
        if (a != b) s += d.at(i, b) * d.at(n + i, a);
      }
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace

std::vector<Subset> spinor_basis(int n, int parity) {
  std::vector<Subset> out;
  for (int k = parity; k <= n; k += 2)
    for (const auto& c : combinations(n, k)) {
      Subset s = 0;
      for (int i : c) s |= 1u << i;
      out.push_back(s);
    }
  return out;
}

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (s >> i & 1) out.push_back(i + 1);
  return out;
}

std::string subset_name(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Poly SpinorVector::at(Subset s, const RingPtr& ring) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? Poly(ring) : it->second;
}

bool isotropy_check(const PolyMatrix& delta3, const HyperbolicFrame& frame) {
  return is_isotropic_frame(frame.to_frame(delta3), frame.n);
}

std::uint32_t plucker_rows(int n, Subset i, Subset j) {
  Subset all = (1u << n) - 1;
  Subset h = i & j, hs = all & ~(i | j);
  if (Subset diff = i ^ j) {
    Subset a = diff & (~diff + 1);
    h |= a;
    hs |= a;
  }
  return h | (hs << n);
}

PlueckerData plucker_of_image(const PolyMatrix& delta3, const HyperbolicFrame& frame, std::vector<std::uint32_t> row_sets,
                              std::uint64_t seed) {
  int n = frame.n;
  PolyMatrix d = frame.to_frame(delta3);
  Field fp = numeric_field(d.ring());
  Modp f{fp.characteristic()};
  std::mt19937_64 rng(seed);
  std::vector<int> cols;
  for (int attempt = 0; attempt < 4 && static_cast<int>(cols.size()) < n; ++attempt)
    cols = independent_columns(evaluate_image(d, rng, fp), f);
  if (static_cast<int>(cols.size()) < n) throw RankDeficient("image of delta_3 has rank < n");
  if (row_sets.empty())
    for (const auto& c : combinations(2 * n, n)) {
      std::uint32_t m = 0;
      for (int r : c) m |= 1u << r;
      row_sets.push_back(m);
    }
  PlueckerData out;
  out.n = n;
  out.columns = cols;
  Poly g(d.ring());
  for (auto s : row_sets) {
    Poly p = minor(d, rows_of(n, s), cols);
    if (p.is_zero()) continue;
    g = g.is_zero() ? p : gcd(g, p);
    out.coords.emplace(s, std::move(p));
  }
  for (auto& [s, p] : out.coords) p = exact_divide(p, g);
  // Common scalar content, with the first coordinate sign-normalized.
  if (!out.coords.empty()) {
    const Field& field = d.ring()->field();
    Scalar c;
    if (field.is_rational()) {
      mpz_class num = 0, den = 1;
      for (const auto& [s, p] : out.coords) {
        Scalar ci = p.content();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ci.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ci.get_den().get_mpz_t());
      }
      c = Scalar(num, den);
      if (out.coords.begin()->second.lead().coeff < 0) c = -c;
    } else {
      c = out.coords.begin()->second.lead().coeff;
    }
    for (auto& [s, p] : out.coords) p = p.scaled(field.inv(c));
  }
  return out;
}

Component component_test(const PolyMatrix& m, const HyperbolicFrame& frame, std::uint64_t seed) {
  int n = frame.n;
  PolyMatrix d = frame.to_frame(m);
  Field fp = numeric_field(d.ring());
  Modp f{fp.characteristic()};
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto im = evaluate_image(d, rng, fp);
    if (im.rank != n) continue;
    if (auto s = numeric_spinor(n, im.cols, f)) return s->parity == 0 ? Component::same_as_Hstar : Component::opposite;
  }
  throw Error("columns do not span an isotropic summand of rank n");
}

SpinorVector spinor_coordinates(const PolyMatrix& delta3, const HyperbolicFrame& frame, std::uint64_t seed) {
  int n = frame.n;
  const RingPtr& ring = delta3.ring();
  PolyMatrix d = frame.to_frame(delta3);
  if (!is_isotropic_frame(d, n)) throw Error("image of delta_3 is not isotropic");
  if (component_test(delta3, frame, seed) == Component::same_as_Hstar) throw WrongComponent();

  auto odd = spinor_basis(n, 1);
  std::vector<std::uint32_t> diag;
  for (Subset i : odd) diag.push_back(diagonal_rows(n, i));
  PlueckerData pd = plucker_of_image(delta3, frame, diag, seed);
  std::map<Subset, Poly> q;
  for (Subset i : odd)
    if (auto it = pd.coords.find(diagonal_rows(n, i)); it != pd.coords.end()) q.emplace(i, it->second);
  if (q.empty()) throw RankDeficient("all diagonal Pluecker coordinates vanish");

  Subset i0 = q.begin()->first;
  for (Subset i : odd)
    if (q.count(i)) {
      i0 = i;
      break;
    }
  Scalar lead = q.at(i0).lead().coeff;
  const Field& field = ring->field();
  auto normalized = [&](const Poly& p) { return p.scaled(field.inv(lead)); };
  Poly root0 = perfect_square_root(normalized(q.at(i0)));

  // Candidate roots up to sign, then signs from a numeric pure spinor.
  std::map<Subset, std::vector<Poly>> candidates;
  for (const auto& [i, p] : q) {
    if (i == i0) continue;
    for (const Poly& c : {normalized(p), -normalized(p)}) try {
        candidates[i].push_back(perfect_square_root(c));
      } catch (const NotASquare&) {
      }
    if (candidates[i].empty()) throw NotASquare();
  }

  Field fp = numeric_field(ring);
  Modp f{fp.characteristic()};
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto im = evaluate_image(d.submatrix([&] {
      std::vector<int> r(2 * n);
      for (int k = 0; k < 2 * n; ++k) r[k] = k;
      return r;
    }(), pd.columns), rng, fp);
    if (im.rank != n) continue;
    auto mu = numeric_spinor(n, im.cols, f);
    if (!mu || mu->parity != 1) continue;
    std::uint64_t r0 = eval_word(root0, im.point, fp);
    auto m0 = mu->values.find(i0);
    if (!r0 || m0 == mu->values.end()) continue;
    // lambda_I(pt) should be r0 * mu_I / mu_I0.
    std::uint64_t ratio = f.mul(r0, f.inv(m0->second));
    bool consistent = true;
    SpinorVector out{n, 1, {}};
    out.coeffs.emplace(i0, root0);
    for (Subset i : odd) {
      if (i == i0) continue;
      auto mi = mu->values.find(i);
      std::uint64_t target = mi == mu->values.end() ? 0 : f.mul(ratio, mi->second);
      auto qi = candidates.find(i);
      if (qi == candidates.end()) {
        if (target) consistent = false;
        continue;
      }
      bool found = false;
      for (const Poly& c : qi->second) {
        std::uint64_t v = eval_word(c, im.point, fp);
        if (!v) break;
        if (v == target) {
          out.coeffs.emplace(i, c);
          found = true;
        } else if (f.neg(v) == target) {
          out.coeffs.emplace(i, -c);
          found = true;
        }
        if (found) break;
      }
      if (!found) consistent = false;
      if (!consistent) break;
    }
    if (!consistent) continue;
    for (int c = 0; c < d.cols(); ++c)
      if (!clifford_action(out, d.column(c)).is_zero()) throw Error("spinor coordinates fail to annihilate delta_3");
    return out;
  }
  throw NotASquare();
}

SpinorVector clifford_action(const SpinorVector& v, const PolyVec& x) {
  int n = v.n;
  if (static_cast<int>(x.size()) != 2 * n) throw DimensionMismatch("clifford action needs a vector of length 2n");
  SpinorVector out{n, 1 - v.parity, {}};
  for (const auto& [k, c] : v.coeffs)
    for (int i = 0; i < n; ++i) {
      if (int s = wedge_sign(k, i); s && !x[i].is_zero()) {
        Poly t = x[i] * c;
        accumulate(out.coeffs, k | (1u << i), s > 0 ? t : -t);
      }
      if (int s = contract_sign(k, i); s && !x[n + i].is_zero()) {
        Poly t = x[n + i] * c;
        accumulate(out.coeffs, k & ~(1u << i), s > 0 ? t : -t);
      }
    }
  return out;
}

PolyMatrix diagonal_map(const HyperbolicFrame& frame, const SpinorVector& lambda) {
  int n = frame.n;
  const RingPtr& ring = frame.embed.ring();
  auto basis = spinor_basis(n, 1 - lambda.parity);
  std::map<Subset, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  // v(K) pairs with x to the e_K coefficient of x . lambda; the form
  // identification swaps the coefficient of e_i (on x) into the e'_i slot.
  PolyMatrix v(ring, 2 * n, static_cast<int>(basis.size()));
  for (const auto& [k, c] : lambda.coeffs)
    for (int i = 0; i < n; ++i) {
      if (int s = wedge_sign(k, i)) {
        Poly& e = v.at(n + i, index.at(k | (1u << i)));
        e += s > 0 ? c : -c;
      }
      if (int s = contract_sign(k, i)) {
        Poly& e = v.at(i, index.at(k & ~(1u << i)));
        e += s > 0 ? c : -c;
      }
    }
  PolyMatrix out = frame.embed * v;
  for (Subset k : basis) out.col_labels.push_back(subset_name(k));
  return out;
}

PolyMatrix build_w(const FreeComplex& b, const HyperbolicFrame& frame, const SpinorVector& lambda) {
  PolyMatrix target = diagonal_map(frame, lambda);
  Lifter lifter(b.diff(3));
  PolyMatrix w(b.ring, b.diff(3).cols(), target.cols());
  for (int c = 0; c < target.cols(); ++c) w.set_column(c, lifter.lift(target.column(c)));
  w.col_labels = target.col_labels;
  if (b.labels.size() > 3) w.row_labels = b.labels[3];
  return w;
}

SingletonUnitReport singleton_unit_test(const PolyMatrix& m, const HyperbolicFrame& frame) {
  int n = frame.n;
  PolyMatrix d = frame.to_frame(m);
  SingletonUnitReport rep;
  PolyMatrix p = d.row_block(n, n);
  rep.projection_unit = codimension(m.ring(), minors_ideal(p, n - 1)) == kInfiniteGrade;
  SpinorVector lambda = spinor_coordinates(m, frame);
  std::vector<Poly> singles;
  for (int i = 0; i < n; ++i)
    if (auto it = lambda.coeffs.find(1u << i); it != lambda.coeffs.end()) singles.push_back(it->second);
  rep.lambda_unit = !singles.empty() && codimension(m.ring(), singles) == kInfiniteGrade;
  return rep;
}

PolyMatrix big_cell_graph(const PolyMatrix& m, const HyperbolicFrame& frame) {
  int n = frame.n;
  const RingPtr& ring = m.ring();
  PolyMatrix d = frame.to_frame(m);
  PolyMatrix top = d.row_block(0, n), bottom = d.row_block(n, n);
  // A unit maximal minor of the H^* block makes the summand a graph.
  for (const auto& cols : combinations(d.cols(), n)) {
    PolyMatrix b = bottom.submatrix([&] {
      std::vector<int> r(n);
      for (int k = 0; k < n; ++k) r[k] = k;
      return r;
    }(), cols);
    Poly det = determinant(b);
    if (det.is_zero() || !det.is_constant()) continue;
    Scalar inv = ring->field().inv(det.constant_value());
    PolyMatrix binv = adjugate(b).scaled(inv);
    PolyMatrix phi = top.submatrix([&] {
      std::vector<int> r(n);
      for (int k = 0; k < n; ++k) r[k] = k;
      return r;
    }(), cols) * binv;
    if (!(phi + phi.transpose()).is_zero()) break;
    for (int i = 0; i < n; ++i)
      if (!phi.at(i, i).is_zero()) throw NotInCell();
    if (phi * bottom != top) break;
    return phi;
  }
  throw NotInCell();
}

HyperbolicFrame move_frame(const HyperbolicFrame& frame, const FrameMove& m) {
  int n = frame.n;
  const RingPtr& ring = frame.embed.ring();
  // New basis vectors written in the old frame.
  PolyMatrix g = PolyMatrix::identity(ring, 2 * n);
  Poly a = Poly::constant(ring, m.alpha);
  switch (m.kind) {
    case FrameMove::sl:
      // e_j -> e_j + a e_i, e'_i -> e'_i - a e'_j
      g.at(m.i, m.j) = a;
      g.at(n + m.j, n + m.i) = -a;
      break;
    case FrameMove::rotation:
      // e'_j -> e'_j + a e_i, e'_i -> e'_i - a e_j
      g.at(m.i, n + m.j) = a;
      g.at(m.j, n + m.i) = -a;
      break;
    case FrameMove::double_swap:
      for (int k : {m.i, m.j}) {
        g.at(k, k) = Poly(ring);
        g.at(n + k, n + k) = Poly(ring);
        g.at(k, n + k) = Poly::constant(ring, 1);
        g.at(n + k, k) = Poly::constant(ring, 1);
      }
      break;
    case FrameMove::swap:
      g.at(m.i, m.i) = Poly(ring);
      g.at(n + m.i, n + m.i) = Poly(ring);
      g.at(m.i, n + m.i) = Poly::constant(ring, 1);
      g.at(n + m.i, m.i) = Poly::constant(ring, 1);
      break;
  }
  HyperbolicFrame out = frame;
  out.embed = frame.embed * g;
  return out;
}

SpinorVector move_spinor(const SpinorVector& lambda, const FrameMove& m) {
  int n = lambda.n;
  SpinorVector out{n, lambda.parity, {}};
  Subset bi = 1u << m.i, bj = 1u << m.j;
  switch (m.kind) {
    case FrameMove::sl:
      // Coordinates change by the exterior power of g^{-1}: e_j -> e_j - a e_i on H.
      for (const auto& [k, c] : lambda.coeffs) {
        accumulate(out.coeffs, k, c);
        if ((k & bj) && !(k & bi)) {
          Subset rest = k & ~bj;
          int s = wedge_sign(rest, m.j) * wedge_sign(rest, m.i);
          accumulate(out.coeffs, rest | bi, c.scaled(-s * m.alpha));
        }
      }
      break;
    case FrameMove::rotation:
      // lambda - a e_i ^ e_j ^ lambda
      for (const auto& [k, c] : lambda.coeffs) {
        accumulate(out.coeffs, k, c);
        if (!(k & bi) && !(k & bj)) {
          int s = wedge_sign(k, m.j) * wedge_sign(k | bj, m.i);
          accumulate(out.coeffs, k | bi | bj, c.scaled(-s * m.alpha));
        }
      }
      break;
    case FrameMove::double_swap:
      // (e_i - iota_i)(e_j - iota_j), up to a global sign
      for (const auto& [k, c] : lambda.coeffs) {
        int s1 = (k & bj) ? -contract_sign(k, m.j) : wedge_sign(k, m.j);
        Subset k1 = k ^ bj;
        int s2 = (k1 & bi) ? -contract_sign(k1, m.i) : wedge_sign(k1, m.i);
        accumulate(out.coeffs, k1 ^ bi, s1 * s2 > 0 ? c : -c);
      }
      break;
    case FrameMove::swap:
      throw Error("a single swap changes the component; recompute the spinor");
  }
  return out;
}

}  // namespace resfold
