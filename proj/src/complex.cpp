#include "resfold/complex.hpp"

#include <climits>
#include <random>
#include <set>
#include <sstream>

#include "resfold/determinantal.hpp"

namespace resfold {

namespace {

std::string shape_problem(const std::vector<PolyMatrix>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i].cols() != d[i + 1].rows())
      return "d_" + std::to_string(i + 1) + " has " + std::to_string(d[i].cols()) + " columns but d_" +
             std::to_string(i + 2) + " has " + std::to_string(d[i + 1].rows()) + " rows";
  return {};
}

}  // namespace

FreeComplex FreeComplex::unchecked(RingPtr ring, std::vector<PolyMatrix> differentials) {
  FreeComplex f;
  f.ring = std::move(ring);
  f.d = std::move(differentials);
  if (!f.d.empty()) {
    f.ranks.push_back(f.d[0].rows());
    for (const auto& m : f.d) f.ranks.push_back(m.cols());
  }
  return f;
}

FreeComplex::FreeComplex(RingPtr r, std::vector<PolyMatrix> differentials) {
  *this = unchecked(std::move(r), std::move(differentials));
  ComplexReport rep = check_complex(*this);
  if (!rep.shapes_ok) throw NotAComplex(rep.shape_error);
  for (const auto& c : rep.checks)
    if (!c.zero)
      throw NotAComplex("d_" + std::to_string(c.i) + " d_" + std::to_string(c.i + 1) + " is nonzero at (" +
                        std::to_string(c.entry->first) + ", " + std::to_string(c.entry->second) + ")");
}

ComplexReport check_complex(const FreeComplex& f) {
  ComplexReport rep;
  rep.shape_error = shape_problem(f.d);
  if (!rep.shape_error.empty()) {
    rep.ok = rep.shapes_ok = false;
    return rep;
  }
  for (int i = 1; i < f.length(); ++i) {
    PolyMatrix prod = f.diff(i) * f.diff(i + 1);
    auto at = prod.first_nonzero();
    rep.checks.push_back({i, !at.has_value(), at});
    if (at) rep.ok = false;
  }
  return rep;
}

// ----------------------------------------------------------------- grades

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> d(i, n - 1);
    std::swap(all[i], all[d(rng)]);
  }
  std::vector<int> out(all.begin(), all.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

struct GeneratorSet {
  std::vector<Poly> gens;
  std::set<std::string> seen;
  bool unit = false;
  bool add(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) unit = true;
    Poly q = p.primitive();
    if (!seen.insert(q.to_string()).second) return false;
    gens.push_back(std::move(q));
    return true;
  }
};

}  // namespace

namespace {

// Row and column weights with deg m_ij = col_j - row_i for every nonzero
// entry; then every minor is homogeneous.
bool degree_compatible(const PolyMatrix& m) {
  const int unset = INT_MIN;
  std::vector<int> row(m.rows(), unset), col(m.cols(), unset);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !m.at(i, j).is_homogeneous()) return false;
  for (int start = 0; start < m.rows(); ++start) {
    if (row[start] != unset) continue;
    row[start] = 0;
    std::vector<std::pair<bool, int>> stack{{true, start}};
    while (!stack.empty()) {
      auto [is_row, k] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (int j = 0; j < m.cols(); ++j) {
          if (m.at(k, j).is_zero()) continue;
          int want = row[k] + m.at(k, j).total_degree();
          if (col[j] == unset) {
            col[j] = want;
            stack.push_back({false, j});
          } else if (col[j] != want) {
            return false;
          }
        }
      } else {
        for (int i = 0; i < m.rows(); ++i) {
          if (m.at(i, k).is_zero()) continue;
          int want = col[k] - m.at(i, k).total_degree();
          if (row[i] == unset) {
            row[i] = want;
            stack.push_back({true, i});
          } else if (row[i] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Substitutes x_j -> sum_{k<t} c_jk x_k for j >= t. For a homogeneous ideal J
// the image J' in t variables satisfies ht J >= ht J'.
PolyMatrix linear_section(const PolyMatrix& m, int t, std::mt19937_64& rng) {
  const RingPtr& ring = m.ring();
  std::vector<Poly> images;
  for (int j = 0; j < ring->nvars(); ++j) {
    if (j < t) {
      images.push_back(Poly::variable(ring, j));
      continue;
    }
    Poly l(ring);
    for (int k = 0; k < t; ++k) l += Poly::variable(ring, k).scaled(ring->field().random(rng, 7, true));
    images.push_back(l);
  }
  PolyMatrix out(ring, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = m.at(i, j).substitute(images);
  return out;
}

// Same matrix over F_p. For homogeneous ideals the height can only drop
// modulo p, so heights computed there are lower bounds over QQ.
std::optional<PolyMatrix> modulo_prime(const PolyMatrix& m) {
  const RingPtr& ring = m.ring();
  if (!ring->field().is_rational()) return m;
  Field fp = Field::prime(32003);
  RingPtr target = make_ring(ring->variables(), fp, ring->multidegrees());
  PolyMatrix out(target, m.rows(), m.cols());
  try {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        std::vector<Term> terms;
        for (const auto& t : m.at(i, j).terms()) terms.push_back({t.mono, fp.reduce(t.coeff)});
        out.at(i, j) = Poly::from_terms(target, std::move(terms));
      }
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

GradeReport grade_of_minors(const PolyMatrix& m, int k, int target, const GradeOptions& opt) {
  GradeReport rep;
  const RingPtr& ring = m.ring();
  if (k <= 0) return {kInfiniteGrade, true, 0};
  if (k > std::min(m.rows(), m.cols())) return {0, true, 0};
  double count = binomial(m.rows(), k) * binomial(m.cols(), k);
  GeneratorSet set;
  if (count <= opt.full_limit) {
    for_each_minor(m, k, [&](const std::vector<int>&, const std::vector<int>&, const Poly& p) {
      set.add(p);
      return !set.unit;
    });
    rep.generators_used = static_cast<int>(set.gens.size());
    rep.value = set.unit ? kInfiniteGrade : codimension(ring, set.gens);
    rep.exact = true;
    return rep;
  }
  std::mt19937_64 rng(opt.seed);
  int n = ring->nvars();
  int t = std::min(target, n);
  // Cut down to t variables first when the minors are homogeneous.
  bool graded = degree_compatible(m);
  bool section = opt.stop_at_target && t < n && graded;
  PolyMatrix cut = m;
  if (graded)
    if (auto reduced = modulo_prime(m)) cut = *reduced;
  if (section) cut = linear_section(cut, t, rng);
  const PolyMatrix& use = cut;
  int current = 0;
  bool done = false;
  auto certify = [&] {
    current = codimension(use.ring(), set.gens);
    if (section && current >= t) current = t;
    done = current >= n || (opt.stop_at_target && current >= target);
  };
  int attempts = 0;
  while (!done && static_cast<int>(set.gens.size()) < opt.sample_budget && attempts < 20 * opt.sample_budget) {
    ++attempts;
    Poly p = minor(use, random_subset(m.rows(), k, rng), random_subset(m.cols(), k, rng));
    if (!set.add(p)) continue;
    if (set.unit) return {kInfiniteGrade, true, static_cast<int>(set.gens.size())};
    // The height is at most the number of generators.
    if (static_cast<int>(set.gens.size()) <= current) continue;
    if (static_cast<int>(set.gens.size()) < t) continue;
    certify();
  }
  // Sparse matrices: most random minors vanish, so walk all of them.
  if (!done && count <= opt.enumerate_limit) {
    std::size_t next = std::max<std::size_t>(2 * set.gens.size(), 8);
    std::size_t checked = set.gens.size();
    for_each_minor(use, k, [&](const std::vector<int>&, const std::vector<int>&, const Poly& p) {
      if (!set.add(p)) return true;
      if (set.unit) return false;
      if (set.gens.size() >= next) {
        next *= 2;
        checked = set.gens.size();
        certify();
      }
      return !done;
    });
    if (set.unit) return {kInfiniteGrade, true, static_cast<int>(set.gens.size())};
    if (!done && set.gens.size() != checked) certify();
  }
  rep.value = current;
  rep.exact = !section && current >= n;
  rep.generators_used = static_cast<int>(set.gens.size());
  return rep;
}

namespace {

AcyclicityVerdict verdict(const FreeComplex& f, const GradeOptions& opt, const std::function<int(int)>& required) {
  AcyclicityVerdict v;
  int c = f.length();
  std::vector<int> expected(c + 2, 0);
  for (int i = c; i >= 1; --i) expected[i] = f.ranks[i] - expected[i + 1];
  v.acyclic = true;
  for (int i = 1; i <= c; ++i) {
    AcyclicityEntry e{i, expected[i], 0, required(i), {}, true};
    GradeOptions o = opt;
    o.seed = opt.seed + static_cast<std::uint64_t>(i);
    e.rank = generic_rank(f.diff(i), o.seed);
    if (e.expected_rank < 0 || e.rank != e.expected_rank) {
      e.ok = false;
      v.rank_ok = false;
    } else {
      e.grade = grade_of_minors(f.diff(i), e.expected_rank, e.required_grade, o);
      e.ok = e.grade.value >= e.required_grade;
      if (!e.ok && !e.grade.exact) v.undetermined = true;
    }
    if (!e.ok) v.acyclic = false;
    v.entries.push_back(e);
  }
  if (expected[1] > f.ranks[0]) v.rank_ok = v.acyclic = false;
  return v;
}

std::string grade_text(const GradeReport& g) {
  if (g.value == kInfiniteGrade) return "inf";
  return (g.exact ? "" : ">=") + std::to_string(g.value);
}

}  // namespace

std::string AcyclicityVerdict::explain() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "d_" << e.i << ": expected rank " << e.expected_rank << ", generic rank " << e.rank;
    if (e.rank == e.expected_rank) os << ", grade " << grade_text(e.grade) << " (need " << e.required_grade << ")";
    os << (e.ok ? " ok" : " FAIL") << "\n";
  }
  os << (acyclic ? "acyclic" : undetermined ? "not certified" : "not acyclic") << "\n";
  return os.str();
}

AcyclicityVerdict be_acyclicity(const FreeComplex& f, const GradeOptions& opt) {
  return verdict(f, opt, [](int i) { return i; });
}

AcyclicityVerdict acyclic_in_grade(const FreeComplex& f, int s, const GradeOptions& opt) {
  return verdict(f, opt, [s](int i) { return std::min(i, s + 1); });
}

FreeComplex dualize(const FreeComplex& f) {
  std::vector<PolyMatrix> d;
  for (int i = f.length(); i >= 1; --i) d.push_back(f.diff(i).transpose());
  FreeComplex out = FreeComplex::unchecked(f.ring, std::move(d));
  out.labels.assign(f.labels.rbegin(), f.labels.rend());
  return out;
}

PolyMatrix hyperbolic_form(RingPtr ring, int n) {
  PolyMatrix g(ring, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g.at(i, n + i) = Poly::constant(ring, 1);
    g.at(n + i, i) = Poly::constant(ring, 1);
  }
  return g;
}

SelfDualReport check_selfdual(const FreeComplex& b, const SelfDualStructure& s) {
  auto fail = [](std::string why) { return SelfDualReport{false, std::move(why)}; };
  if (b.length() != 4) return fail("length is not four");
  if (b.ranks[0] != b.ranks[4] || b.ranks[1] != b.ranks[3]) return fail("format is not symmetric");
  if (b.ranks[2] % 2) return fail("middle rank is odd");
  const PolyMatrix& g = s.form;
  if (g.rows() != b.ranks[2] || g.cols() != b.ranks[2]) return fail("form has the wrong size");
  if (g.transpose() != g) return fail("form is not symmetric");
  Poly det = determinant(g);
  if (det.is_zero() || !det.is_constant()) throw Error("form is not invertible over the ring");
  if (b.diff(2) != b.diff(3).transpose() * g) {
    auto at = (b.diff(2) - b.diff(3).transpose() * g).first_nonzero();
    return fail("d_2 differs from d_3^T G at (" + std::to_string(at->first) + ", " + std::to_string(at->second) + ")");
  }
  if (b.diff(1) != b.diff(4).transpose()) return fail("d_1 differs from d_4^T");
  return {true, "ok"};
}

namespace {

bool unit_minor_ideal(const PolyMatrix& m, int k) {
  if (k <= 0) return true;
  if (k > std::min(m.rows(), m.cols())) return false;
  GeneratorSet set;
  std::size_t next_check = 4;
  bool unit = false;
  for_each_minor(m, k, [&](const std::vector<int>&, const std::vector<int>&, const Poly& p) {
    set.add(p);
    if (set.unit) return !(unit = true);
    if (set.gens.size() >= next_check) {
      next_check *= 2;
      if (groebner_basis(m.ring(), set.gens).is_unit()) return !(unit = true);
    }
    return true;
  });
  return unit || (!set.gens.empty() && groebner_basis(m.ring(), set.gens).is_unit());
}

}  // namespace

bool is_split_exact(const FreeComplex& f, const GradeOptions& opt) {
  int c = f.length();
  std::vector<int> expected(c + 2, 0);
  for (int i = c; i >= 1; --i) expected[i] = f.ranks[i] - expected[i + 1];
  // Exactness at F_0 too: d_1 must be onto.
  if (expected[1] != f.ranks[0]) return false;
  for (int i = 1; i <= c; ++i) {
    if (expected[i] < 0 || generic_rank(f.diff(i), opt.seed + i) != expected[i]) return false;
    if (!unit_minor_ideal(f.diff(i), expected[i])) return false;
  }
  return true;
}

std::vector<Poly> resolved_ideal(const FreeComplex& f) {
  if (f.length() < 1 || f.ranks[0] != 1) throw Error("resolved ideal needs rank F_0 = 1");
  std::vector<Poly> out;
  for (int j = 0; j < f.ranks[1]; ++j)
    if (!f.diff(1).at(0, j).is_zero()) out.push_back(f.diff(1).at(0, j));
  return out;
}

}  // namespace resfold
