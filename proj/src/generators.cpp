#include "resfold/generators.hpp"

#include <algorithm>
#include <numeric>

#include "resfold/determinantal.hpp"

namespace resfold {

FreeComplex koszul(RingPtr ring, const std::vector<Poly>& gens) {
  int n = static_cast<int>(gens.size());
  std::vector<PolyMatrix> d;
  std::vector<std::vector<std::string>> labels;
  auto name = [](const std::vector<int>& s) {
    std::string out = "e";
    for (int i : s) out += "_" + std::to_string(i + 1);
    return s.empty() ? std::string("1") : out;
  };
  for (int k = 0; k <= n; ++k) {
    std::vector<std::string> l;
    for (const auto& s : combinations(n, k)) l.push_back(name(s));
    labels.push_back(l);
  }
  for (int k = 1; k <= n; ++k) {
    auto src = combinations(n, k), dst = combinations(n, k - 1);
    PolyMatrix m(ring, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (int t = 0; t < k; ++t) {
        std::vector<int> rest = src[c];
        rest.erase(rest.begin() + t);
        int r = static_cast<int>(std::lower_bound(dst.begin(), dst.end(), rest) - dst.begin());
        m.at(r, static_cast<int>(c)) = (t & 1) ? -gens[src[c][t]] : gens[src[c][t]];
      }
    m.row_labels = labels[k - 1];
    m.col_labels = labels[k];
    d.push_back(m);
  }
  FreeComplex f(ring, d);
  f.labels = labels;
  return f;
}

RingPtr generic_matrix_ring(int n, Field field) {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> deg;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      vars.push_back("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      std::vector<int> g(2 * n, 0);
      g[i] = 1;
      g[n + j] = 1;
      deg.push_back(g);
    }
  return make_ring(vars, field, deg);
}

PolyMatrix generic_matrix(const RingPtr& ring, int n) {
  PolyMatrix x(ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x.at(i, j) = Poly::variable(ring, i * n + j);
  return x;
}

namespace {

// A pair of constant n x n matrices, row-major.
struct MatPair {
  std::vector<Scalar> a, b;
  std::string label;
};

std::vector<MatPair> gn_table(int n) {
  auto zero = [n] { return std::vector<Scalar>(n * n, 0); };
  auto e = [&](int i, int j) {
    auto m = zero();
    m[i * n + j] = 1;
    return m;
  };
  auto s = [](int i) { return std::to_string(i + 1); };
  std::vector<MatPair> upper, lower;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      upper.push_back({e(i, j), zero(), "(e" + s(i) + s(j) + ",0)"});
      lower.push_back({e(j, i), zero(), "(e" + s(j) + s(i) + ",0)"});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      upper.push_back({zero(), e(j, i), "(0,e" + s(j) + s(i) + ")"});
      auto m = e(i, j);
      m[i * n + j] = -1;
      lower.push_back({zero(), m, "(0,-e" + s(i) + s(j) + ")"});
    }
  for (int i = 0; i + 1 < n; ++i) {
    upper.push_back({e(i, i), e(i, i), "(e" + s(i) + s(i) + ",e" + s(i) + s(i) + ")"});
    auto a = zero(), b = zero();
    a[i * n + i] = Scalar(1, 2);
    a[(n - 1) * n + n - 1] = Scalar(-1, 2);
    b[i * n + i] = Scalar(-1, 2);
    b[(n - 1) * n + n - 1] = Scalar(1, 2);
    std::string ii = s(i) + s(i), nn = s(n - 1) + s(n - 1);
    lower.push_back({a, b, "(e" + ii + "-e" + nn + ",e" + nn + "-e" + ii + ")/2"});
  }
  upper.insert(upper.end(), lower.begin(), lower.end());
  return upper;
}

PolyMatrix constant_matrix(const RingPtr& ring, int n, const std::vector<Scalar>& v) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n * n; ++i)
    if (v[i] != 0) m.at(i / n, i % n) = Poly::constant(ring, ring->field().reduce(v[i]));
  return m;
}

Poly trace_product(const PolyMatrix& p, const PolyMatrix& c) {
  Poly t(p.ring());
  for (int a = 0; a < p.rows(); ++a)
    for (int b = 0; b < p.cols(); ++b)
      if (!p.at(a, b).is_zero() && !c.at(b, a).is_zero()) t += p.at(a, b) * c.at(b, a);
  return t;
}

std::vector<std::string> matrix_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l.push_back("e_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return l;
}

}  // namespace

SelfDualExample gn_complex(int n, Field field) {
  if (n < 2) throw Error("gn_complex needs n >= 2");
  if (field.characteristic() == 2) throw Error("gn_complex needs 1/2");
  RingPtr ring = generic_matrix_ring(n, field);
  PolyMatrix x = generic_matrix(ring, n);
  auto table = gn_table(n);
  int half = n * n - 1, rank2 = 2 * half, sq = n * n;
  std::vector<PolyMatrix> ta, tb;
  std::vector<std::string> b2_labels;
  for (const auto& t : table) {
    ta.push_back(constant_matrix(ring, n, t.a));
    tb.push_back(constant_matrix(ring, n, t.b));
    b2_labels.push_back(t.label);
  }
  auto partner = [half](int k) { return k < half ? k + half : k - half; };

  PolyMatrix adj = adjugate(x);
  PolyMatrix d4(ring, sq, 1);
  for (int i = 0; i < sq; ++i) d4.at(i, 0) = adj.at(i / n, i % n);

  PolyMatrix d3(ring, rank2, sq);
  for (int c = 0; c < sq; ++c) {
    std::vector<Scalar> unit(sq, 0);
    unit[c] = 1;
    PolyMatrix e = constant_matrix(ring, n, unit);
    PolyMatrix p = x * e, q = e * x;
    for (int k = 0; k < rank2; ++k) {
      int l = partner(k);
      d3.at(k, c) = trace_product(p, ta[l]) - trace_product(q, tb[l]);
    }
  }

  PolyMatrix d2(ring, sq, rank2);
  for (int k = 0; k < rank2; ++k) {
    PolyMatrix v = ta[k] * x - x * tb[k];
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) d2.at(r * n + s, k) = v.at(s, r);
  }

  PolyMatrix d1 = d4.transpose();
  auto ml = matrix_labels(n);
  d1.row_labels = {"1"};
  d1.col_labels = ml;
  d2.row_labels = ml;
  d2.col_labels = b2_labels;
  d3.row_labels = b2_labels;
  d3.col_labels = ml;
  d4.row_labels = ml;
  d4.col_labels = {"1"};

  SelfDualExample out;
  out.complex = FreeComplex(ring, {d1, d2, d3, d4});
  out.complex.labels = {{"1"}, ml, b2_labels, ml, {"1"}};
  out.structure.form = hyperbolic_form(ring, half);
  out.structure.twist_degree.assign(2 * n, n - 1);
  out.frame = {half, PolyMatrix::identity(ring, rank2), out.structure.form};
  out.frame.embed.row_labels = b2_labels;
  return out;
}

HyperbolicFrame gn_paper_H(const SelfDualExample& gn) {
  if (gn.frame.n != 8) throw Error("the explicit H is for n = 3");
  // Positions in the basis table, counted from 1.
  const int h[] = {9, 11, 12, 14, 2, 5, 8, 15};
  const int hstar[] = {1, 3, 4, 6, 10, 13, 16, 7};
  const RingPtr& ring = gn.complex.ring;
  PolyMatrix e(ring, 16, 16);
  for (int k = 0; k < 8; ++k) {
    e.at(h[k] - 1, k) = Poly::constant(ring, 1);
    e.at(hstar[k] - 1, 8 + k) = Poly::constant(ring, 1);
  }
  e.row_labels = gn.frame.embed.row_labels;
  return {8, e, gn.structure.form};
}

FreeComplex split_A(RingPtr ring, int p, int q) {
  if (p < 1 || q < 3) throw Error("split_A needs p >= 1 and q >= 3");
  int m = p + 1, a3 = q - 1;
  std::vector<std::string> ml, al;
  for (int i = 1; i <= m; ++i) ml.push_back("m_" + std::to_string(i));
  for (int i = 1; i <= a3; ++i) al.push_back("a_" + std::to_string(i));
  std::vector<std::string> l1{"r"}, l2 = al;
  l1.insert(l1.end(), ml.begin(), ml.end());
  l2.insert(l2.end(), ml.begin(), ml.end());
  auto one = Poly::constant(ring, 1);
  PolyMatrix d1(ring, 1, m + 1), d2(ring, m + 1, a3 + m), d3(ring, a3 + m, a3);
  d1.at(0, 0) = one;
  for (int i = 0; i < m; ++i) d2.at(1 + i, a3 + i) = one;
  for (int i = 0; i < a3; ++i) d3.at(i, i) = one;
  d1.row_labels = {"1"};
  d1.col_labels = d2.row_labels = l1;
  d2.col_labels = d3.row_labels = l2;
  d3.col_labels = al;
  FreeComplex f(ring, {d1, d2, d3});
  f.labels = {{"1"}, l1, l2, al};
  return f;
}

SelfDualExample split_B(RingPtr ring, int p, int q, const PolyMatrix& phi) {
  if (p < 1 || q < 3) throw Error("split_B needs p >= 1 and q >= 3");
  int n = p + 2, c = q - 2;
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("phi must be n x n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (phi.at(i, j) != -phi.at(j, i)) throw Error("phi is not alternating");
  std::vector<std::string> cl, b3, b2;
  for (int i = 1; i <= c; ++i) cl.push_back("c_" + std::to_string(i));
  b3 = cl;
  for (int i = 1; i <= n; ++i) b3.push_back("m_" + std::to_string(i));
  for (int i = 1; i <= n; ++i) b2.push_back("e_" + std::to_string(i));
  for (int i = 1; i <= n; ++i) b2.push_back("e'_" + std::to_string(i));
  auto one = Poly::constant(ring, 1);
  PolyMatrix d4(ring, c + n, c), d3(ring, 2 * n, c + n);
  for (int i = 0; i < c; ++i) d4.at(i, i) = one;
  d3.at(0, c) = one;
  for (int i = 1; i < n; ++i) {
    d3.at(n + i, c + i) = one;
    for (int k = 0; k < n; ++k) d3.at(k, c + i) = phi.at(k, i);
  }
  PolyMatrix g = hyperbolic_form(ring, n);
  PolyMatrix d2 = d3.transpose() * g, d1 = d4.transpose();
  std::vector<std::string> cdual, b1;
  for (const auto& s : cl) cdual.push_back(s + "*");
  for (const auto& s : b3) b1.push_back(s + "*");
  d4.row_labels = d3.col_labels = b3;
  d4.col_labels = cl;
  d3.row_labels = d2.col_labels = b2;
  d2.row_labels = d1.col_labels = b1;
  d1.row_labels = cdual;
  SelfDualExample out;
  out.complex = FreeComplex(ring, {d1, d2, d3, d4});
  out.complex.labels = {cdual, b1, b2, b3, cl};
  out.structure.form = g;
  out.frame = {n, PolyMatrix::identity(ring, 2 * n), g};
  return out;
}

SelfDualExample split_B(RingPtr ring, int p, int q) {
  return split_B(ring, p, q, PolyMatrix(ring, p + 2, p + 2));
}

namespace {

std::vector<int> all_rows(const PolyMatrix& m) {
  std::vector<int> r(m.rows());
  std::iota(r.begin(), r.end(), 0);
  return r;
}

}  // namespace

PolyMatrix prune_to_minimal(const PolyMatrix& m, const std::vector<int>& col_degree) {
  std::vector<int> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return col_degree[a] < col_degree[b]; });
  std::vector<int> kept;
  for (int c : order) {
    PolyVec v = m.column(c);
    if (is_zero(v)) continue;
    if (!kept.empty() && Lifter(m.submatrix(all_rows(m), kept)).try_lift(v)) continue;
    kept.push_back(c);
  }
  return m.submatrix(all_rows(m), kept);
}

namespace {

std::vector<int> column_degrees(const PolyMatrix& m, const std::vector<int>& row_degree) {
  std::vector<int> out;
  for (int c = 0; c < m.cols(); ++c) {
    int deg = 0;
    for (int r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) {
        deg = m.at(r, c).total_degree() + row_degree[r];
        break;
      }
    out.push_back(deg);
  }
  return out;
}

}  // namespace

FreeComplex resolve_ideal(RingPtr ring, const std::vector<Poly>& gens) {
  PolyMatrix d1(ring, 1, static_cast<int>(gens.size()));
  std::vector<int> deg;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_homogeneous()) throw Error("resolve_ideal needs homogeneous generators");
    d1.at(0, static_cast<int>(i)) = gens[i];
    deg.push_back(gens[i].total_degree());
  }
  d1 = prune_to_minimal(d1, deg);
  deg = column_degrees(d1, {0});
  std::vector<PolyMatrix> d{d1};
  for (;;) {
    PolyMatrix s = syzygy_generators(d.back());
    if (s.cols() == 0 || s.is_zero()) break;
    auto sd = column_degrees(s, deg);
    PolyMatrix pruned = prune_to_minimal(s, sd);
    deg = column_degrees(pruned, deg);
    d.push_back(pruned);
  }
  return FreeComplex(ring, d);
}

FreeComplex resolve_square_of_max_ideal() {
  RingPtr ring = make_ring({"x", "y", "z"}, Field::rationals(), {{1}, {1}, {1}});
  std::vector<Poly> q;
  for (const char* s : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) q.push_back(Poly::parse(ring, s));
  return resolve_ideal(ring, q);
}

}  // namespace resfold
