#include "resfold/groebner.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

namespace resfold {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::grevlex:
      return grevlex_cmp(a, b);
    case OrderKind::lex:
      return lex_cmp(a, b);
    case OrderKind::block: {
      Monomial a1, a2, b1, b2;
      for (int v = 0; v < kMaxVars; ++v) {
        if (v < split) {
          a1.set_exp(v, a.exp(v));
          b1.set_exp(v, b.exp(v));
        } else {
          a2.set_exp(v, a.exp(v));
          b2.set_exp(v, b.exp(v));
        }
      }
      int c = grevlex_cmp(a1, b1);
      return c != 0 ? c : grevlex_cmp(a2, b2);
    }
  }
  return 0;
}

namespace {

struct MTerm {
  Monomial mono;
  int comp;
  Scalar coeff;
};

struct MVec {
  std::vector<MTerm> terms;
  int sugar = 0;
  bool empty() const { return terms.empty(); }
  const MTerm& lead() const { return terms.front(); }
};

// Components from `tags` on sit below every earlier one; within each block
// the monomial decides first, then the lower component index.
struct TermCmp {
  MonomialOrder order;
  int tags = INT_MAX;
  int operator()(const MTerm& a, const MTerm& b) const {
    bool ta = a.comp >= tags, tb = b.comp >= tags;
    if (ta != tb) return ta ? -1 : 1;
    int c = order.compare(a.mono, b.mono);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

int max_degree(const MVec& v) {
  int d = 0;
  for (const auto& t : v.terms) d = std::max<int>(d, t.mono.degree);
  return d;
}

void sort_terms(std::vector<MTerm>& terms, const TermCmp& cmp) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) { return cmp(a, b) > 0; });
}

// p[from..] - c * m * g[1..]  (the leading terms are assumed to cancel).
std::vector<MTerm> sub_multiple(const std::vector<MTerm>& p, std::size_t from, const MVec& g,
                                const Monomial& m, const Scalar& c, const Field& f,
                                const TermCmp& cmp) {
  std::vector<MTerm> out;
  out.reserve(p.size() - from + g.terms.size());
  std::size_t i = from, j = 1;
  while (i < p.size() || j < g.terms.size()) {
    if (j >= g.terms.size()) {
      out.push_back(p[i++]);
      continue;
    }
    MTerm gt{g.terms[j].mono * m, g.terms[j].comp, Scalar()};
    int s = i < p.size() ? cmp(p[i], gt) : -1;
    if (s > 0) {
      out.push_back(p[i++]);
    } else if (s < 0) {
      gt.coeff = f.neg(f.mul(c, g.terms[j].coeff));
      out.push_back(std::move(gt));
      ++j;
    } else {
      Scalar v = f.sub(p[i].coeff, f.mul(c, g.terms[j].coeff));
      if (v != 0) out.push_back(MTerm{p[i].mono, p[i].comp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct LeadInfo {
  Monomial mono;
  int comp;
  std::uint32_t mask;
};

class Engine {
 public:
  Engine(Field field, MonomialOrder order, bool product_criterion, int pair_limit = INT_MAX)
      : field_(field), cmp_{order, pair_limit}, product_(product_criterion), pair_limit_(pair_limit) {}

  void add_input(std::vector<MVec> gens) {
    std::stable_sort(gens.begin(), gens.end(), [&](const MVec& a, const MVec& b) {
      if (a.empty() || b.empty()) return !a.empty() < !b.empty();
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return cmp_(a.lead(), b.lead()) < 0;
    });
    for (auto& g : gens) {
      MVec r = reduce(std::move(g), true);
      if (!r.empty()) insert(std::move(r));
      process_pairs_up_to(INT_MAX);
    }
  }

  // Returns the reduced basis: minimal, tail-reduced, monic, ascending leads.
  std::vector<MVec> reduced() {
    std::vector<MVec> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) out.push_back(basis_[i]);
    Engine tail(field_, cmp_.order, false, pair_limit_);
    for (std::size_t i = 0; i < out.size(); ++i) {
      tail.basis_.clear();
      tail.leads_.clear();
      tail.redundant_.clear();
      for (std::size_t k = 0; k < out.size(); ++k)
        if (k != i) tail.push(out[k]);
      // Only the tail needs reducing; the leading term is irreducible.
      MVec rest;
      rest.terms.assign(out[i].terms.begin() + 1, out[i].terms.end());
      rest = tail.reduce(std::move(rest), true);
      MTerm lead = out[i].terms.front();
      out[i].terms.clear();
      out[i].terms.push_back(lead);
      out[i].terms.insert(out[i].terms.end(), rest.terms.begin(), rest.terms.end());
    }
    std::sort(out.begin(), out.end(),
              [&](const MVec& a, const MVec& b) { return cmp_(a.lead(), b.lead()) < 0; });
    return out;
  }

  void load_basis(const std::vector<MVec>& basis) {
    for (const auto& g : basis) push(g);
  }

  MVec reduce(MVec p, bool full) const {
    std::vector<MTerm> done;
    std::vector<MTerm> cur = std::move(p.terms);
    std::size_t start = 0;
    while (start < cur.size()) {
      const MTerm& lt = cur[start];
      int r = find_reducer(lt);
      if (r < 0) {
        if (!full) break;
        done.push_back(lt);
        ++start;
        continue;
      }
      Monomial q = lt.mono / basis_[r].lead().mono;
      Scalar c = lt.coeff;
      p.sugar = std::max<int>(p.sugar, basis_[r].sugar + static_cast<int>(q.degree));
      cur = sub_multiple(cur, start + 1, basis_[r], q, c, field_, cmp_);
      start = 0;
    }
    done.insert(done.end(), std::make_move_iterator(cur.begin() + static_cast<std::ptrdiff_t>(start)),
                std::make_move_iterator(cur.end()));
    p.terms = std::move(done);
    return p;
  }

 private:
  struct Pair {
    int sugar;
    int lcm_degree;
    int i, j;
    bool operator<(const Pair& o) const {
      return std::tie(sugar, lcm_degree, i, j) < std::tie(o.sugar, o.lcm_degree, o.i, o.j);
    }
  };

  int find_reducer(const MTerm& t) const {
    std::uint32_t mask = t.mono.support_mask();
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      const LeadInfo& l = leads_[k];
      if (redundant_[k] || l.comp != t.comp || (l.mask & ~mask)) continue;
      if (divides(l.mono, t.mono)) return static_cast<int>(k);
    }
    return -1;
  }

  void make_monic(MVec& v) const {
    if (v.empty() || v.lead().coeff == 1) return;
    Scalar inv = field_.inv(v.lead().coeff);
    for (auto& t : v.terms) t.coeff = field_.mul(t.coeff, inv);
  }

  void push(MVec v) {
    make_monic(v);
    leads_.push_back({v.lead().mono, v.lead().comp, v.lead().mono.support_mask()});
    basis_.push_back(std::move(v));
    redundant_.push_back(0);
  }

  char& status(int i, int j) { return status_[j][i]; }

  void insert(MVec v) {
    push(std::move(v));
    int n = static_cast<int>(basis_.size()) - 1;
    status_.emplace_back(n, 0);
    const LeadInfo& h = leads_[n];
    // Pairs between elements led in tag components only complete the
    // syzygy module; they are not needed for lifting or for generators.
    for (int i = 0; i < n && h.comp < pair_limit_; ++i) {
      if (redundant_[i] || leads_[i].comp != h.comp) continue;
      if (product_ && coprime(leads_[i].mono, h.mono)) {
        status(i, n) = 2;
        continue;
      }
      Monomial l = lcm(leads_[i].mono, h.mono);
      int s = std::max(basis_[i].sugar + static_cast<int>(l.degree - leads_[i].mono.degree),
                       basis_[n].sugar + static_cast<int>(l.degree - h.mono.degree));
      pairs_.insert(Pair{s, static_cast<int>(l.degree), i, n});
      status(i, n) = 1;
    }
    for (int i = 0; i < n; ++i)
      if (!redundant_[i] && leads_[i].comp == h.comp && divides(h.mono, leads_[i].mono)) redundant_[i] = 1;
  }

  bool chain_criterion(int i, int j, const Monomial& l) {
    int comp = leads_[i].comp;
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == i || k == j || leads_[k].comp != comp) continue;
      if (!divides(leads_[k].mono, l)) continue;
      auto st = [&](int a, int b) { return a < b ? status(a, b) : status(b, a); };
      if (st(i, k) == 2 && st(j, k) == 2) return true;
    }
    return false;
  }

  void process_pairs_up_to(int) {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Monomial l = lcm(leads_[p.i].mono, leads_[p.j].mono);
      if (chain_criterion(p.i, p.j, l)) {
        status(p.i, p.j) = 2;
        continue;
      }
      const MVec& a = basis_[p.i];
      const MVec& b = basis_[p.j];
      Monomial qa = l / a.lead().mono, qb = l / b.lead().mono;
      // S = qa*a - qb*b with monic leads: build qa*a, then subtract.
      MVec s;
      s.sugar = p.sugar;
      s.terms.reserve(a.terms.size());
      for (const auto& t : a.terms) s.terms.push_back(MTerm{t.mono * qa, t.comp, t.coeff});
      s.terms = sub_multiple(s.terms, 0, b, qb, Scalar(1), field_, cmp_);
      // sub_multiple skipped b's lead and kept a's lead; drop that lead (they cancel).
      s.terms.erase(s.terms.begin());
      status(p.i, p.j) = 2;
      MVec r = reduce(std::move(s), true);
      if (!r.empty()) insert(std::move(r));
    }
  }

  Field field_;
  TermCmp cmp_;
  bool product_;
  int pair_limit_;
  std::vector<MVec> basis_;
  std::vector<LeadInfo> leads_;
  std::vector<char> redundant_;
  std::vector<std::vector<char>> status_;
  std::set<Pair> pairs_;
};

MVec to_mvec(const Poly& p, int comp, const TermCmp& cmp) {
  MVec v;
  for (const auto& t : p.terms()) v.terms.push_back(MTerm{t.mono, comp, t.coeff});
  sort_terms(v.terms, cmp);
  v.sugar = p.is_zero() ? 0 : p.total_degree();
  return v;
}

Poly to_poly(const RingPtr& ring, const MVec& v) {
  std::vector<Term> terms;
  for (const auto& t : v.terms) terms.push_back(Term{t.mono, t.coeff});
  return Poly::from_terms(ring, std::move(terms));
}

// Component c of v as a polynomial, with c shifted by offset.
std::vector<Poly> split_components(const RingPtr& ring, const MVec& v, int first, int count) {
  std::vector<std::vector<Term>> parts(count);
  for (const auto& t : v.terms)
    if (t.comp >= first && t.comp < first + count) parts[t.comp - first].push_back(Term{t.mono, t.coeff});
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(Poly::from_terms(ring, std::move(p)));
  return out;
}

}  // namespace

// ------------------------------------------------------------------- ideals

Poly GroebnerBasis::normal_form(const Poly& f) const {
  TermCmp cmp{order_};
  Engine e(ring_->field(), order_, false);
  std::vector<MVec> basis;
  for (const auto& g : gens_) basis.push_back(to_mvec(g, 0, cmp));
  e.load_basis(basis);
  return to_poly(ring_, e.reduce(to_mvec(f, 0, cmp), true));
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("leading monomial of zero");
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best) > 0) best = t.mono;
  return best;
}

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Poly>& gens, MonomialOrder order) {
  TermCmp cmp{order};
  Engine e(ring->field(), order, true);
  std::vector<MVec> input;
  for (const auto& g : gens) {
    check_same_ring(g, Poly(ring));
    if (!g.is_zero()) input.push_back(to_mvec(g, 0, cmp));
  }
  e.add_input(std::move(input));
  std::vector<Poly> out;
  for (const auto& v : e.reduced()) out.push_back(to_poly(ring, v));
  return GroebnerBasis(std::move(ring), std::move(out), order);
}

// ------------------------------------------------------------------ modules

struct Lifter::Impl {
  RingPtr ring;
  int rows = 0, cols = 0;
  std::vector<MVec> basis;
  TermCmp cmp{MonomialOrder{}};
};

Lifter::Lifter(const PolyMatrix& m) : m_(m) {
  auto impl = std::make_shared<Impl>();
  impl->ring = m.ring();
  impl->rows = m.rows();
  impl->cols = m.cols();
  impl->cmp.tags = m.rows();
  Engine e(m.ring()->field(), MonomialOrder{}, false, m.rows());
  std::vector<MVec> input;
  for (int c = 0; c < m.cols(); ++c) {
    MVec v;
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& t : m.at(r, c).terms()) v.terms.push_back(MTerm{t.mono, r, t.coeff});
    sort_terms(v.terms, impl->cmp);
    int d = max_degree(v);
    v.terms.push_back(MTerm{Monomial{}, m.rows() + c, Scalar(1)});
    // Tags carry the column degree so that sugar stays homogeneous-like.
    v.sugar = d;
    input.push_back(std::move(v));
  }
  e.add_input(std::move(input));
  impl->basis = e.reduced();
  impl_ = std::move(impl);
}

std::optional<PolyVec> Lifter::try_lift(const PolyVec& v) const {
  if (static_cast<int>(v.size()) != impl_->rows) throw DimensionMismatch("lift target length");
  const RingPtr& ring = impl_->ring;
  MVec target;
  for (int r = 0; r < impl_->rows; ++r)
    for (const auto& t : v[r].terms()) target.terms.push_back(MTerm{t.mono, r, t.coeff});
  sort_terms(target.terms, impl_->cmp);
  target.sugar = max_degree(target);
  Engine e(ring->field(), MonomialOrder{}, false, impl_->rows);
  e.load_basis(impl_->basis);
  MVec r = e.reduce(std::move(target), true);
  for (const auto& t : r.terms)
    if (t.comp < impl_->rows) return std::nullopt;
  PolyVec x = split_components(ring, r, impl_->rows, impl_->cols);
  for (auto& p : x) p = -p;
#ifndef NDEBUG
  if (!is_zero(m_.apply(x) - v)) throw Error("internal error: lift does not re-expand");
#endif
  return x;
}

PolyVec Lifter::lift(const PolyVec& v) const {
  auto x = try_lift(v);
  if (!x) throw NoLift();
  return *x;
}

PolyMatrix Lifter::syzygies() const {
  std::vector<PolyVec> cols;
  for (const auto& g : impl_->basis)
    if (g.lead().comp >= impl_->rows) cols.push_back(split_components(impl_->ring, g, impl_->rows, impl_->cols));
  return PolyMatrix::from_columns(impl_->ring, impl_->cols, cols);
}

PolyVec lift_through_matrix(const PolyVec& v, const PolyMatrix& m) { return Lifter(m).lift(v); }

PolyMatrix syzygy_generators(const PolyMatrix& m) { return Lifter(m).syzygies(); }

std::vector<Poly> membership_with_certificate(const Poly& f, const std::vector<Poly>& gens) {
  PolyMatrix row(f.ring(), 1, static_cast<int>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) row.at(0, static_cast<int>(i)) = gens[i];
  auto x = Lifter(row).try_lift({f});
  if (!x) throw NotMember();
  return *x;
}

// ------------------------------------------------------------- codimension

int min_hitting_set(std::vector<std::uint32_t> supports) {
  for (auto s : supports)
    if (s == 0) return kInfiniteGrade;
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) {
              int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto m : minimal)
      if ((m & s) == m) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  int best = 33;
  std::function<void(std::uint32_t, int)> search = [&](std::uint32_t chosen, int size) {
    if (size >= best) return;
    const std::uint32_t* open = nullptr;
    for (const auto& s : minimal)
      if (!(s & chosen)) {
        open = &s;
        break;
      }
    if (!open) {
      best = size;
      return;
    }
    if (size + 1 >= best) return;
    std::uint32_t s = *open;
    while (s) {
      int v = __builtin_ctz(s);
      s &= s - 1;
      search(chosen | (1u << v), size + 1);
    }
  };
  search(0, 0);
  return best;
}

int codimension(RingPtr ring, const std::vector<Poly>& gens) {
  GroebnerBasis gb = groebner_basis(ring, gens);
  if (gb.is_zero_ideal()) return 0;
  if (gb.is_unit()) return kInfiniteGrade;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators()) supports.push_back(g.lead().mono.support_mask());
  return min_hitting_set(std::move(supports));
}

bool ideal_equal(RingPtr ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return groebner_basis(ring, a).generators() == groebner_basis(ring, b).generators();
}

bool radical_membership(const Poly& f, const std::vector<Poly>& gens) {
  const RingPtr& ring = f.ring();
  int n = ring->nvars();
  if (n >= kMaxVars) throw Error("no room for the auxiliary variable");
  auto vars = ring->variables();
  vars.push_back("_t");
  RingPtr ext = make_ring(vars, ring->field());
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  std::vector<Poly> ext_gens;
  for (const auto& g : gens) ext_gens.push_back(g.embed(ext, map));
  ext_gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, n) * f.embed(ext, map));
  return groebner_basis(ext, ext_gens).is_unit();
}

}  // namespace resfold
