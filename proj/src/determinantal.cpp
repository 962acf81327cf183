#include "resfold/determinantal.hpp"

#include <unordered_map>

namespace resfold {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace {

// Expansion row by row, memoized over the set of used columns.
Poly det_by_subsets(const PolyMatrix& m) {
  int n = m.rows();
  const RingPtr& ring = m.ring();
  std::vector<std::uint32_t> layer{0};
  std::unordered_map<std::uint32_t, Poly> val{{0u, Poly::constant(ring, 1)}};
  for (int r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, Poly> next;
    std::vector<std::uint32_t> keys;
    for (std::uint32_t mask : layer) {
      const Poly& acc = val.at(mask);
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const Poly& a = m.at(r, c);
        if (a.is_zero()) continue;
        int inversions = __builtin_popcount(mask >> (c + 1));
        Poly t = acc * a;
        if (inversions & 1) t = -t;
        std::uint32_t nm = mask | (1u << c);
        auto it = next.find(nm);
        if (it == next.end()) {
          next.emplace(nm, std::move(t));
          keys.push_back(nm);
        } else {
          it->second += t;
        }
      }
    }
    layer.clear();
    for (auto k : keys)
      if (!next.at(k).is_zero()) layer.push_back(k);
    val = std::move(next);
    if (layer.empty()) return Poly(ring);
  }
  return val.at((n == 32) ? ~0u : ((1u << n) - 1));
}

Poly det_bareiss(PolyMatrix a) {
  int n = a.rows();
  const RingPtr& ring = a.ring();
  Poly prev = Poly::constant(ring, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly(ring);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_divide(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (n <= 14) return det_by_subsets(m);
  return det_bareiss(m);
}

Poly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix s(m.ring(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
  return determinant(s);
}

void for_each_minor(const PolyMatrix& m, int k,
                    const std::function<bool(const std::vector<int>&, const std::vector<int>&, const Poly&)>& f) {
  auto rs = combinations(m.rows(), k);
  auto cs = combinations(m.cols(), k);
  for (const auto& r : rs)
    for (const auto& c : cs)
      if (!f(r, c, minor(m, r, c))) return;
}

std::vector<Poly> minors_ideal(const PolyMatrix& m, int k) {
  if (k == 0) return {Poly::constant(m.ring(), 1)};
  if (k > std::min(m.rows(), m.cols())) return {};
  std::vector<Poly> out;
  for_each_minor(m, k, [&](const std::vector<int>&, const std::vector<int>&, const Poly& p) {
    if (!p.is_zero()) out.push_back(p);
    return true;
  });
  return out;
}

namespace {

Poly pf_rec(const PolyMatrix& m, std::uint32_t mask, std::unordered_map<std::uint32_t, Poly>& memo) {
  if (mask == 0) return Poly::constant(m.ring(), 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int s0 = __builtin_ctz(mask);
  std::uint32_t rest = mask & ~(1u << s0);
  Poly sum(m.ring());
  int between = 0;
  for (std::uint32_t r = rest; r; r &= r - 1) {
    int j = __builtin_ctz(r);
    const Poly& a = m.at(s0, j);
    if (!a.is_zero()) {
      Poly t = a * pf_rec(m, rest & ~(1u << j), memo);
      sum += (between & 1) ? -t : t;
    }
    ++between;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace

Poly pfaffian(const PolyMatrix& m, const std::vector<int>& rows) {
  if (rows.size() % 2) throw NotAlternating();
  if (rows.size() > 32) throw DimensionMismatch("pfaffian of more than 32 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!m.at(rows[i], rows[i]).is_zero()) throw NotAlternating();
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (m.at(rows[i], rows[j]) != -m.at(rows[j], rows[i])) throw NotAlternating();
  }
  PolyMatrix sub = m.submatrix(rows, rows);
  std::unordered_map<std::uint32_t, Poly> memo;
  std::uint32_t full = rows.size() == 32 ? ~0u : ((1u << rows.size()) - 1);
  Poly pf = pf_rec(sub, full, memo);
#ifndef NDEBUG
  if (pf * pf != determinant(sub)) throw Error("internal error: Pf^2 != det");
#endif
  return pf;
}

Poly pfaffian(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NotAlternating();
  std::vector<int> all(m.rows());
  for (int i = 0; i < m.rows(); ++i) all[i] = i;
  return pfaffian(m, all);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("adjugate of non-square matrix");
  int n = m.rows();
  PolyMatrix adj(m.ring(), n, n);
  if (n == 1) {
    adj.at(0, 0) = Poly::constant(m.ring(), 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Poly c = minor(m, rows, cols);
      adj.at(j, i) = ((i + j) & 1) ? -c : c;
    }
  return adj;
}

std::vector<Scalar> random_point(const PolyRing& ring, std::mt19937_64& rng) {
  std::vector<Scalar> pt;
  for (int i = 0; i < ring.nvars(); ++i) pt.push_back(ring.field().random(rng, 1000, true));
  return pt;
}

int generic_rank(const PolyMatrix& m, std::uint64_t seed) {
  if (m.empty()) return 0;
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int trial = 0; trial < 3; ++trial) {
    auto pt = random_point(*m.ring(), rng);
    best = std::max(best, evaluate(m, pt).rank());
  }
  return best;
}

PolyMatrix exterior_power(const PolyMatrix& m, int k) {
  auto rs = combinations(m.rows(), k);
  auto cs = combinations(m.cols(), k);
  PolyMatrix out(m.ring(), static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = minor(m, rs[i], cs[j]);
  return out;
}

}  // namespace resfold
