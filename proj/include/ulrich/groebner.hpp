#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ulrich/polynomial.hpp"

namespace ulrich {

namespace detail {

// Working representation for Gröbner computations: terms sorted in
// descending order with respect to a fixed monomial order.
template <Field F>
using TermVec = std::vector<Term<F>>;

template <Field F>
TermVec<F> to_ordered(const Polynomial<F>& p, const MonomialOrder& ord) {
  TermVec<F> v(p.terms().begin(), p.terms().end());
  if (ord.kind != OrderKind::grevlex)
    std::sort(v.begin(), v.end(), [&](const Term<F>& a, const Term<F>& b) { return ord.greater(a.exp, b.exp); });
  return v;
}

template <Field F>
Polynomial<F> from_ordered(const F& field, int nvars, const TermVec<F>& v) {
  return Polynomial<F>::from_terms(field, nvars, v);
}

// p - c * x^shift * g, all sorted descending.
template <Field F>
TermVec<F> sub_multiple(const TermVec<F>& p, std::size_t p_from, const typename F::value_type& c,
                        const ExponentVector& shift, const TermVec<F>& g, const MonomialOrder& ord, const F& f) {
  TermVec<F> r;
  r.reserve(p.size() - p_from + g.size());
  std::size_t i = p_from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(p[i++]);
      continue;
    }
    ExponentVector ge = g[j].exp + shift;
    if (i == p.size()) {
      r.push_back({ge, f.neg(f.mul(c, g[j].coef))});
      ++j;
      continue;
    }
    auto cmp = ord.compare(p[i].exp, ge);
    if (cmp > 0) {
      r.push_back(p[i++]);
    } else if (cmp < 0) {
      r.push_back({ge, f.neg(f.mul(c, g[j].coef))});
      ++j;
    } else {
      auto v = f.sub(p[i].coef, f.mul(c, g[j].coef));
      if (!f.is_zero(v)) r.push_back({p[i].exp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <Field F>
void make_monic(TermVec<F>& p, const F& f) {
  if (p.empty() || f.is_one(p.front().coef)) return;
  auto inv = f.inv(p.front().coef);
  for (auto& t : p) t.coef = f.mul(t.coef, inv);
}

// Full reduction of p modulo the polynomials `basis[idx]` for idx in `active`.
template <Field F>
TermVec<F> reduce(TermVec<F> p, const std::vector<TermVec<F>>& basis, const std::vector<int>& active,
                  const MonomialOrder& ord, const F& f) {
  TermVec<F> rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const auto& lt = p[head];
    int div = -1;
    for (int idx : active) {
      if (basis[idx].front().exp.divides(lt.exp)) {
        div = idx;
        break;
      }
    }
    if (div < 0) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const auto& g = basis[div];
    auto c = f.div(lt.coef, g.front().coef);
    p = sub_multiple(p, head, c, lt.exp - g.front().exp, g, ord, f);
    head = 0;
  }
  return rem;
}

template <Field F>
TermVec<F> s_polynomial(const TermVec<F>& a, const TermVec<F>& b, const MonomialOrder& ord, const F& f) {
  ExponentVector l = lcm(a.front().exp, b.front().exp);
  TermVec<F> sa;
  sa.reserve(a.size());
  auto ca = f.inv(a.front().coef);
  for (const auto& t : a) sa.push_back({t.exp + (l - a.front().exp), f.mul(t.coef, ca)});
  auto cb = f.inv(b.front().coef);
  return sub_multiple(sa, 0, cb, l - b.front().exp, b, ord, f);
}

struct CriticalPair {
  int i, j;
  ExponentVector lcm;
};

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer–Möller installation of the coprime and chain criteria. Returns the
// reduced basis, sorted ascending by leading monomial.
template <Field F>
std::vector<TermVec<F>> buchberger(std::vector<TermVec<F>> input, const MonomialOrder& ord, const F& f) {
  std::vector<TermVec<F>> polys;
  std::vector<int> G;
  std::vector<CriticalPair> B;

  auto lt = [&](int i) -> const ExponentVector& { return polys[i].front().exp; };

  auto update = [&](int h) {
    std::vector<CriticalPair> C;
    for (int g : G) C.push_back({h, g, lcm(lt(h), lt(g))});
    std::vector<CriticalPair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto& p = C[k];
      bool keep = coprime(lt(h), lt(p.j));
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < C.size() && keep; ++m)
          if (C[m].lcm.divides(p.lcm)) keep = false;
        for (std::size_t m = 0; m < D.size() && keep; ++m)
          if (D[m].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<CriticalPair> Bnew;
    for (const auto& p : B) {
      bool drop = lt(h).divides(p.lcm) && lcm(lt(p.i), lt(h)) != p.lcm && lcm(lt(h), lt(p.j)) != p.lcm;
      if (!drop) Bnew.push_back(p);
    }
    for (const auto& p : D)
      if (!coprime(lt(h), lt(p.j))) Bnew.push_back(p);
    B = std::move(Bnew);
    std::vector<int> Gnew;
    for (int g : G)
      if (!lt(h).divides(lt(g))) Gnew.push_back(g);
    Gnew.push_back(h);
    G = std::move(Gnew);
  };

  for (auto& p : input) {
    if (p.empty()) continue;
    auto r = reduce(std::move(p), polys, G, ord, f);
    if (r.empty()) continue;
    make_monic(r, f);
    if (r.front().exp.is_one()) return {r};
    polys.push_back(std::move(r));
    update(static_cast<int>(polys.size()) - 1);
  }

  while (!B.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < B.size(); ++k) {
      int db = B[best].lcm.degree(), dk = B[k].lcm.degree();
      if (dk < db || (dk == db && ord.compare(B[k].lcm, B[best].lcm) < 0)) best = k;
    }
    CriticalPair p = B[best];
    B.erase(B.begin() + static_cast<std::ptrdiff_t>(best));
    auto s = s_polynomial(polys[p.i], polys[p.j], ord, f);
    auto h = reduce(std::move(s), polys, G, ord, f);
    if (h.empty()) continue;
    make_monic(h, f);
    if (h.front().exp.is_one()) return {h};
    polys.push_back(std::move(h));
    update(static_cast<int>(polys.size()) - 1);
  }

  // Minimalize, then interreduce tails.
  std::vector<int> minimal;
  for (int g : G) {
    bool redundant = false;
    for (int o : G)
      if (o != g && lt(o).divides(lt(g)) && (lt(o) != lt(g) || o < g)) redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  std::vector<TermVec<F>> out;
  for (int g : minimal) {
    std::vector<int> others;
    for (int o : minimal)
      if (o != g) others.push_back(o);
    TermVec<F> tail(polys[g].begin() + 1, polys[g].end());
    auto r = reduce(std::move(tail), polys, others, ord, f);
    TermVec<F> full;
    full.reserve(r.size() + 1);
    full.push_back(polys[g].front());
    for (auto& t : r) full.push_back(std::move(t));
    make_monic(full, f);
    out.push_back(std::move(full));
  }
  std::sort(out.begin(), out.end(),
            [&](const TermVec<F>& a, const TermVec<F>& b) { return ord.compare(a.front().exp, b.front().exp) < 0; });
  return out;
}

}  // namespace detail

/// Ideal of F[x_1..x_n] given by generators, with its reduced Gröbner basis
/// computed on first use and shared by all copies.
template <Field F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(F field, int nvars, std::vector<Poly> gens = {}, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order), gens_(std::move(gens)),
        state_(std::make_shared<State>()) {
    for (const auto& g : gens_)
      if (g.nvars() != nvars_ || !(g.field() == field_)) throw std::invalid_argument("ambient mismatch");
  }
  explicit Ideal(const std::vector<Poly>& gens, MonomialOrder order = MonomialOrder::grevlex())
      : Ideal(require_nonempty(gens).front().field(), gens.front().nvars(), gens, order) {}

  static Ideal unit(F field, int nvars) {
    auto one = Poly::one(field, nvars);
    return Ideal(std::move(field), nvars, {std::move(one)});
  }
  /// (x_1, ..., x_n)
  static Ideal maximal(F field, int nvars) {
    std::vector<Poly> vars;
    for (int i = 0; i < nvars; ++i) vars.push_back(Poly::variable(field, nvars, i));
    return Ideal(std::move(field), nvars, std::move(vars));
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& generators() const { return gens_; }

  Ideal with_order(const MonomialOrder& ord) const { return Ideal(field_, nvars_, gens_, ord); }
  Ideal with_generators(std::vector<Poly> gens) const { return Ideal(field_, nvars_, std::move(gens), order_); }

  /// Reduced Gröbner basis, ascending by leading monomial. Empty for (0).
  const std::vector<Poly>& basis() const {
    ensure();
    return state_->basis;
  }
  const std::vector<detail::TermVec<F>>& ordered_basis() const {
    ensure();
    return state_->ordered;
  }
  bool has_basis() const { return state_->done; }

  std::vector<ExponentVector> leading_exponents() const {
    std::vector<ExponentVector> out;
    for (const auto& g : ordered_basis()) out.push_back(g.front().exp);
    return out;
  }
  bool is_unit() const {
    const auto& b = ordered_basis();
    return b.size() == 1 && b.front().front().exp.is_one();
  }
  bool is_zero() const { return ordered_basis().empty(); }

 private:
  struct State {
    std::once_flag once;
    bool done = false;
    std::vector<detail::TermVec<F>> ordered;
    std::vector<Poly> basis;
  };

  static const std::vector<Poly>& require_nonempty(const std::vector<Poly>& g) {
    if (g.empty()) throw std::invalid_argument("empty generator list needs an explicit ambient");
    return g;
  }

  void ensure() const {
    std::call_once(state_->once, [this] {
      std::vector<detail::TermVec<F>> in;
      for (const auto& g : gens_) in.push_back(detail::to_ordered(g, order_));
      state_->ordered = detail::buchberger(std::move(in), order_, field_);
      for (const auto& t : state_->ordered) state_->basis.push_back(detail::from_ordered(field_, nvars_, t));
      state_->done = true;
    });
  }

  F field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Poly> gens_;
  std::shared_ptr<State> state_;
};

template <Field F>
Ideal<F> groebner(const Ideal<F>& I) {
  I.basis();
  return I;
}

template <Field F>
void check_same_ambient(const Ideal<F>& a, const Ideal<F>& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field())) throw std::invalid_argument("ambient mismatch");
}

/// Remainder of p modulo the reduced Gröbner basis of I.
template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& p, const Ideal<F>& I) {
  if (p.nvars() != I.nvars() || !(p.field() == I.field())) throw std::invalid_argument("ambient mismatch");
  const auto& b = I.ordered_basis();
  std::vector<int> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  auto r = detail::reduce(detail::to_ordered(p, I.order()), b, all, I.order(), I.field());
  return detail::from_ordered(I.field(), I.nvars(), r);
}

template <Field F>
bool contains(const Ideal<F>& I, const Polynomial<F>& p) {
  return normal_form(p, I).is_zero();
}

/// A ⊆ B
template <Field F>
bool is_subset(const Ideal<F>& A, const Ideal<F>& B) {
  check_same_ambient(A, B);
  for (const auto& g : A.generators())
    if (!contains(B, g)) return false;
  return true;
}

template <Field F>
bool ideals_equal(const Ideal<F>& A, const Ideal<F>& B) {
  return is_subset(A, B) && is_subset(B, A);
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& A, const Ideal<F>& B) {
  check_same_ambient(A, B);
  auto g = A.generators();
  g.insert(g.end(), B.generators().begin(), B.generators().end());
  return A.with_generators(std::move(g));
}

template <Field F>
Ideal<F> ideal_product(const Ideal<F>& A, const Ideal<F>& B) {
  check_same_ambient(A, B);
  std::vector<Polynomial<F>> g;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) {
      auto p = a * b;
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  return A.with_generators(std::move(g));
}

/// A^k, with generators replaced by the reduced basis after each step.
template <Field F>
Ideal<F> ideal_power(const Ideal<F>& A, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Ideal<F> P = Ideal<F>::unit(A.field(), A.nvars()).with_order(A.order());
  for (int i = 0; i < k; ++i) {
    P = ideal_product(P, A);
    P = P.with_generators(P.basis());
  }
  return P;
}

/// Exact quotient p / d; throws if d does not divide p.
template <Field F>
Polynomial<F> exact_division(const Polynomial<F>& p, const Polynomial<F>& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const F& f = p.field();
  const auto ord = MonomialOrder::grevlex();
  std::vector<Term<F>> q;
  auto r = detail::to_ordered(p, ord);
  auto dv = detail::to_ordered(d, ord);
  while (!r.empty()) {
    if (!dv.front().exp.divides(r.front().exp)) throw std::domain_error("polynomial does not divide");
    auto c = f.div(r.front().coef, dv.front().coef);
    auto shift = r.front().exp - dv.front().exp;
    q.push_back({shift, c});
    r = detail::sub_multiple(r, 0, c, shift, dv, ord, f);
  }
  return Polynomial<F>::from_terms(f, p.nvars(), std::move(q));
}

/// A ∩ B by eliminating a tag t from t·A + (1 − t)·B.
template <Field F>
Ideal<F> ideal_intersect(const Ideal<F>& A, const Ideal<F>& B) {
  check_same_ambient(A, B);
  const int n = A.nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("too many variables for elimination");
  const F& f = A.field();
  if (A.is_zero() || B.is_zero()) return Ideal<F>(f, n, {}, A.order());
  std::vector<int> up(n), down(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  using P = Polynomial<F>;
  P t = P::variable(f, n + 1, 0);
  P one_minus_t = P::one(f, n + 1) - t;
  std::vector<P> gens;
  for (const auto& a : A.generators()) gens.push_back(t * a.remap(n + 1, up));
  for (const auto& b : B.generators()) gens.push_back(one_minus_t * b.remap(n + 1, up));
  Ideal<F> E(f, n + 1, std::move(gens), MonomialOrder::elimination(1));
  std::vector<P> out;
  for (const auto& g : E.basis()) {
    bool free_of_t = true;
    for (const auto& term : g.terms()) free_of_t = free_of_t && term.exp[0] == 0;
    if (free_of_t) out.push_back(g.remap(n, down));
  }
  return Ideal<F>(f, n, std::move(out), A.order());
}

/// (A : b)
template <Field F>
Ideal<F> ideal_quotient(const Ideal<F>& A, const Polynomial<F>& b) {
  if (b.is_zero()) return Ideal<F>::unit(A.field(), A.nvars()).with_order(A.order());
  Ideal<F> B(A.field(), A.nvars(), {b}, A.order());
  auto inter = ideal_intersect(A, B);
  std::vector<Polynomial<F>> q;
  for (const auto& g : inter.basis()) q.push_back(exact_division(g, b));
  return A.with_generators(std::move(q));
}

/// (A : B) = ∩ over generators b of (A : b).
template <Field F>
Ideal<F> ideal_quotient(const Ideal<F>& A, const Ideal<F>& B) {
  check_same_ambient(A, B);
  Ideal<F> acc = Ideal<F>::unit(A.field(), A.nvars()).with_order(A.order());
  bool first = true;
  for (const auto& b : B.generators()) {
    if (b.is_zero()) continue;
    auto q = ideal_quotient(A, b);
    acc = first ? q : ideal_intersect(acc, q);
    acc = acc.with_generators(acc.basis());
    first = false;
  }
  return acc;
}

/// Standard monomials of I, or nullopt when there are infinitely many.
template <Field F>
std::optional<std::vector<ExponentVector>> standard_monomials(const Ideal<F>& I) {
  auto lts = I.leading_exponents();
  const int n = I.nvars();
  if (I.is_unit()) return std::vector<ExponentVector>{};
  std::vector<int> bound(n, -1);
  for (const auto& e : lts) {
    int mask = e.support_mask();
    for (int i = 0; i < n; ++i)
      if (mask == (1 << i) && (bound[i] < 0 || e[i] < bound[i])) bound[i] = e[i];
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;
  std::vector<ExponentVector> out;
  ExponentVector cur;
  // odometer over the box
  for (;;) {
    bool standard = true;
    for (const auto& e : lts)
      if (e.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    int i = 0;
    while (i < n) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

/// ℓ(S/I) as the number of standard monomials; nullopt means infinite.
template <Field F>
std::optional<std::size_t> colength(const Ideal<F>& I) {
  auto s = standard_monomials(I);
  if (!s) return std::nullopt;
  return s->size();
}

/// Krull dimension of S/I from the leading-term ideal.
template <Field F>
int dim_quotient(const Ideal<F>& I) {
  if (I.is_unit()) throw std::domain_error("unit ideal");
  auto lts = I.leading_exponents();
  const int n = I.nvars();
  int best = 0;
  for (int s = 0; s < (1 << n); ++s) {
    bool independent = true;
    for (const auto& e : lts)
      if ((e.support_mask() & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(static_cast<unsigned>(s)));
  }
  return best;
}

/// True when every variable is nilpotent modulo I and I is proper.
template <Field F>
bool is_primary_to_origin(const Ideal<F>& I) {
  auto c = colength(I);
  if (!c || *c == 0) return false;
  for (int i = 0; i < I.nvars(); ++i) {
    auto xi = Polynomial<F>::variable(I.field(), I.nvars(), i);
    if (!contains(I, xi.pow(static_cast<unsigned>(*c)))) return false;
  }
  return true;
}

/// (x_1, ..., x_n)^k as monomial generators.
template <Field F>
Ideal<F> maximal_ideal_power(const F& field, int nvars, int k, const MonomialOrder& ord = MonomialOrder::grevlex()) {
  std::vector<Polynomial<F>> gens;
  ExponentVector cur;
  std::vector<ExponentVector> monos;
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint16_t>(left);
      monos.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[var] = static_cast<std::uint16_t>(a);
      self(self, var + 1, left - a);
    }
    cur[var] = 0;
  };
  if (nvars > 0) rec(rec, 0, k);
  for (const auto& m : monos) gens.push_back(Polynomial<F>::monomial(field, nvars, m));
  return Ideal<F>(field, nvars, std::move(gens), ord);
}

/// ℓ(A/B) for B ⊆ A with A/B of finite length supported at the origin.
/// Computed as colength(B + m^N) − colength(A + m^N) once A ∩ m^N ⊆ B,
/// which certifies that the truncation loses nothing.
template <Field F>
std::size_t relative_length(const Ideal<F>& A, const Ideal<F>& B, int max_truncation = 128) {
  check_same_ambient(A, B);
  if (!is_subset(B, A)) throw std::invalid_argument("relative_length requires B ⊆ A");
  auto cb = colength(B);
  if (cb) return *cb - *colength(A);
  long previous = -1;
  for (int N = 1; N <= max_truncation; ++N) {
    auto mN = maximal_ideal_power(A.field(), A.nvars(), N, A.order());
    long l = static_cast<long>(*colength(ideal_sum(B, mN))) - static_cast<long>(*colength(ideal_sum(A, mN)));
    if (l == previous && is_subset(ideal_intersect(A, mN), B)) return static_cast<std::size_t>(l);
    previous = l;
  }
  throw std::runtime_error("relative_length: quotient does not have finite length at the origin");
}

/// Buchberger criterion: every S-polynomial of the basis reduces to zero.
template <Field F>
bool satisfies_buchberger_criterion(const Ideal<F>& I) {
  const auto& b = I.ordered_basis();
  std::vector<int> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto s = detail::s_polynomial(b[i], b[j], I.order(), I.field());
      if (!detail::reduce(std::move(s), b, all, I.order(), I.field()).empty()) return false;
    }
  return true;
}

/// Result of reading a multiplicity off the finite differences of a length
/// function t ↦ L(t).
struct DifferenceCertificate {
  long value = 0;
  bool stabilized = false;
  int difference_order = 0;
  /// First t at which the stabilized run of differences starts.
  int window_start = 0;
  std::vector<long> table;  // L(1), L(2), ...
};

/// Reads the `order`-th finite difference of `table` (indexed from t = 1)
/// and reports stabilization once `run` consecutive values agree.
inline DifferenceCertificate stabilized_difference(const std::vector<long>& table, int order, int run = 3) {
  DifferenceCertificate c;
  c.difference_order = order;
  c.table = table;
  std::vector<long> d = table;
  for (int k = 0; k < order; ++k) {
    std::vector<long> nd;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) nd.push_back(d[i + 1] - d[i]);
    d = std::move(nd);
  }
  for (std::size_t i = 0; i + run <= d.size(); ++i) {
    bool same = true;
    for (int k = 1; k < run; ++k) same = same && d[i + k] == d[i];
    if (same) {
      c.value = d[i];
      c.stabilized = true;
      c.window_start = static_cast<int>(i) + 1;
      return c;
    }
  }
  return c;
}

/// e(q; S/J) for dim S/J = `dim`: stabilized `dim`-th difference of
/// t ↦ colength(J + q^t).
template <Field F>
DifferenceCertificate samuel_multiplicity(const Ideal<F>& q, const Ideal<F>& J, int dim, int t_max = 40) {
  check_same_ambient(q, J);
  std::vector<long> table;
  Ideal<F> power = q;
  for (int t = 1; t <= t_max; ++t) {
    if (t > 1) {
      power = ideal_product(power, q);
      power = power.with_generators(power.basis());
    }
    auto c = colength(ideal_sum(J, power));
    if (!c) throw std::invalid_argument("samuel_multiplicity: ideal is not primary to the origin modulo J");
    table.push_back(static_cast<long>(*c));
    if (t >= dim + 3) {
      auto cert = stabilized_difference(table, dim);
      if (cert.stabilized) return cert;
    }
  }
  return stabilized_difference(table, dim);
}

/// e(I) on S for an ideal primary to the origin.
template <Field F>
DifferenceCertificate ideal_multiplicity(const Ideal<F>& I, int t_max = 40) {
  Ideal<F> zero(I.field(), I.nvars(), {}, I.order());
  return samuel_multiplicity(I, zero, I.nvars(), t_max);
}

}  // namespace ulrich
