#pragma once

// Test-side reference computations. Nothing here calls the Groebner engine,
// the semigroup DP or the Koszul code; everything is plain linear algebra or
// enumeration over a bounded box.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ulrich/polynomial.hpp"

namespace oracle {

using Q = mpq_class;
using Mono = std::pair<int, int>;
using Poly2 = std::map<Mono, Q>;

template <class P>
Poly2 from_library(const P& p) {
  Poly2 out;
  for (const auto& t : p.terms()) out[{t.exp[0], t.exp[1]}] = Q(t.coef);
  return out;
}

inline Poly2 times_monomial(const Poly2& p, Mono m) {
  Poly2 out;
  for (const auto& [e, c] : p) out[{e.first + m.first, e.second + m.second}] = c;
  return out;
}

inline Poly2 product(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& v = out[{ea.first + eb.first, ea.second + eb.second}];
      v += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly2 truncate(const Poly2& p, int below) {
  Poly2 out;
  for (const auto& [e, c] : p)
    if (e.first + e.second < below) out[e] = c;
  return out;
}

inline std::vector<Mono> monomials_below(int deg) {
  std::vector<Mono> out;
  for (int d = 0; d < deg; ++d)
    for (int a = 0; a <= d; ++a) out.push_back({a, d - a});
  return out;
}

/// Row-reduced span of rational vectors; rank is the number of stored rows.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  /// Returns true when v was independent of the current span.
  bool insert(std::vector<Q> v) {
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Q& q) { return q != 0; });
    if (it == v.end()) return false;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    Q inv = 1 / v[piv];
    for (auto& q : v) q *= inv;
    for (auto& [p, row] : rows_) {
      if (row[piv] == 0) continue;
      Q c = row[piv];
      for (std::size_t j = 0; j < dim_; ++j) row[j] -= c * v[j];
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }
  bool contains(std::vector<Q> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Q& q) { return q == 0; });
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Q>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      Q c = v[piv];
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * row[j];
    }
  }
  std::size_t dim_;
  std::map<std::size_t, std::vector<Q>> rows_;
};

/// Coordinates of polynomials in a fixed monomial list.
class Coordinates {
 public:
  explicit Coordinates(std::vector<Mono> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Mono>& basis() const { return basis_; }
  /// Terms outside the basis are dropped.
  std::vector<Q> operator()(const Poly2& p, std::size_t block = 0, std::size_t blocks = 1) const {
    std::vector<Q> v(basis_.size() * blocks);
    for (const auto& [e, c] : p) {
      auto it = index_.find(e);
      if (it != index_.end()) v[block * basis_.size() + it->second] = c;
    }
    return v;
  }

 private:
  std::vector<Mono> basis_;
  std::map<Mono, std::size_t> index_;
};

/// f ∈ span{m·g_i : deg m ≤ cofactor_degree}. A positive answer is a proof of
/// membership; a negative one only says no low-degree certificate exists.
inline bool brute_member(const std::vector<Poly2>& gens, const Poly2& f, int cofactor_degree) {
  int top = 0;
  for (const auto& [e, c] : f) top = std::max(top, e.first + e.second);
  for (const auto& g : gens)
    for (const auto& [e, c] : g) top = std::max(top, e.first + e.second + cofactor_degree);
  Coordinates co(monomials_below(top + 1));
  Span span(co.size());
  for (const auto& g : gens)
    for (const auto& m : monomials_below(cofactor_degree + 1)) span.insert(co(times_monomial(g, m)));
  return span.contains(co(f));
}

/// J/m^N inside S/m^N, spanned by truncations of m·g for deg m < N. Requires
/// m^N ⊆ J for the quotient to be S/J.
inline Span truncated_ideal(const std::vector<Poly2>& gens, const Coordinates& co, int N, std::size_t block = 0,
                            std::size_t blocks = 1) {
  Span span(co.size() * blocks);
  for (const auto& g : gens)
    for (const auto& m : monomials_below(N)) span.insert(co(truncate(times_monomial(g, m), N), block, blocks));
  return span;
}

struct Tally {
  long h0 = 0, h1 = 0, h2 = 0;
};

/// Koszul homology of (f, g) on S/J where m^N ⊆ J, by ranks of the two
/// differentials on V = S_{<N} modulo the truncated ideal.
inline Tally koszul_on_quotient(const std::vector<Poly2>& J, const Poly2& f, const Poly2& g, int N) {
  Coordinates co(monomials_below(N));
  const std::size_t n = co.size();
  const long dimM = static_cast<long>(n - truncated_ideal(J, co, N).rank());
  // rank of a map V^k → V^l / W^l is rank(images + W^l) − l·dim W.
  auto image_rank = [&](const std::vector<std::vector<Q>>& images, std::size_t blocks) {
    Span s(n * blocks);
    for (std::size_t b = 0; b < blocks; ++b)
      for (const auto& gen : J)
        for (const auto& m : monomials_below(N)) s.insert(co(truncate(times_monomial(gen, m), N), b, blocks));
    std::size_t base = s.rank();
    for (const auto& v : images) s.insert(v);
    return static_cast<long>(s.rank() - base);
  };
  std::vector<std::vector<Q>> d2_images, d1_images;
  for (const auto& m : co.basis()) {
    Poly2 mono{{m, Q(1)}};
    // d2(v) = (−g v, f v)
    Poly2 gv = truncate(product(g, mono), N), fv = truncate(product(f, mono), N);
    auto a = co(gv, 0, 2), b = co(fv, 1, 2);
    std::vector<Q> v(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) v[i] = b[i] - a[i];
    d2_images.push_back(std::move(v));
    // d1(v, 0) = f v, d1(0, v) = g v
    d1_images.push_back(co(fv));
    d1_images.push_back(co(gv));
  }
  long r2 = image_rank(d2_images, 2);
  long r1 = image_rank(d1_images, 1);
  return {dimM - r1, 2 * dimM - r1 - r2, dimM - r2};
}

/// ν(J) = dim J/mJ, by truncation below N + 1 where m^N ⊆ J.
inline long minimal_generators(const std::vector<Poly2>& J, int N) {
  const int top = N + 1;
  Coordinates co(monomials_below(top));
  auto all = truncated_ideal(J, co, top);
  Span mJ(co.size());
  for (const auto& g : J)
    for (const auto& m : monomials_below(top))
      if (m.first + m.second >= 1) mJ.insert(co(truncate(times_monomial(g, m), top)));
  return static_cast<long>(all.rank() - mJ.rank());
}

// ---------------------------------------------------------------------------
// Semigroups and monomial modules in the plane, by breadth-first closure.

using Point = std::pair<int, int>;

inline std::set<Point> closure(const std::vector<Point>& gens, int max_degree) {
  std::set<Point> seen{{0, 0}};
  std::vector<Point> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Point q{p.first + g.first, p.second + g.second};
        if (q.first + q.second > max_degree) continue;
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Point> gaps(const std::vector<Point>& gens, int max_degree) {
  auto s = closure(gens, max_degree);
  std::vector<Point> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int a = 0; a <= d; ++a)
      if (!s.count({a, d - a})) out.push_back({a, d - a});
  return out;
}

/// Monomial module Σ (m_i + R) restricted to a box.
class PlaneModule {
 public:
  PlaneModule(const std::vector<Point>& ring_gens, std::vector<Point> gens, int reach)
      : ring_(closure(ring_gens, reach)), gens_(std::move(gens)), reach_(reach) {}
  bool contains(Point v) const {
    for (const auto& g : gens_) {
      Point d{v.first - g.first, v.second - g.second};
      if (d.first < 0 || d.second < 0) continue;
      if (d.first + d.second > reach_) continue;
      if (ring_.count(d)) return true;
    }
    return false;
  }

 private:
  std::set<Point> ring_;
  std::vector<Point> gens_;
  int reach_;
};

struct ColonCount {
  long colon = 0, h1 = 0;
};

/// ℓ((M : (x^{ta}, x^{tb}))/M) and h1(x^{ta}, x^{tb}; M) over the box
/// [lo, hi]^2, counted point by point.
inline ColonCount colon_and_h1(const std::vector<PlaneModule>& mods, Point a, Point b, int lo, int hi) {
  ColonCount out;
  for (const auto& M : mods)
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) {
        Point v{i, j};
        Point va{i - a.first, j - a.second}, vb{i - b.first, j - b.second};
        Point vab{i - a.first - b.first, j - a.second - b.second};
        Point pa{i + a.first, j + a.second}, pb{i + b.first, j + b.second};
        if (!M.contains(v) && M.contains(pa) && M.contains(pb)) ++out.colon;
        int k0 = M.contains(v), k2 = M.contains(vab);
        int k1 = M.contains(va) + M.contains(vb);
        int r1 = (k0 && k1) ? 1 : 0, r2 = k2;
        out.h1 += k1 - r1 - r2;
      }
  return out;
}

// ---------------------------------------------------------------------------

/// Random m-primary ideals (x^a, y^b, monomial, binomial) with colength ≤ 30
/// (checked by the caller); returns generators and the N with m^N ⊆ J.
struct RandomIdeal {
  std::vector<Poly2> gens;
  int N = 0;
};

inline RandomIdeal random_ideal(std::mt19937& rng) {
  std::uniform_int_distribution<int> pw(1, 6), ex(0, 4), coin(0, 1);
  int a = pw(rng), b = pw(rng);
  RandomIdeal r;
  r.gens.push_back({{{a, 0}, Q(1)}});
  r.gens.push_back({{{0, b}, Q(1)}});
  Mono m0{ex(rng), ex(rng)};
  if (m0 != Mono{0, 0}) r.gens.push_back({{m0, Q(1)}});
  Mono m1{ex(rng), ex(rng)}, m2{ex(rng), ex(rng)};
  if (m1 != m2 && m1 != Mono{0, 0} && m2 != Mono{0, 0}) r.gens.push_back({{m1, Q(1)}, {m2, Q(coin(rng) ? -1 : 2)}});
  r.N = a + b - 1;
  return r;
}

}  // namespace oracle
