#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/groebner.hpp"
#include "ulrich/linalg.hpp"
#include "ulrich/semigroup.hpp"

namespace ulrich {

/// Lengths of H_0, H_1, H_2 of a two-element Koszul complex.
struct KoszulTally {
  long h0 = 0, h1 = 0, h2 = 0;

  long chi() const { return h0 - h1 + h2; }
  long chi1() const { return h1 - h2; }

  KoszulTally& operator+=(const KoszulTally& o) {
    h0 += o.h0;
    h1 += o.h1;
    h2 += o.h2;
    return *this;
  }
  friend KoszulTally operator+(KoszulTally a, const KoszulTally& b) { return a += b; }
  friend KoszulTally operator*(long k, const KoszulTally& a) { return {k * a.h0, k * a.h1, k * a.h2}; }
  friend bool operator==(const KoszulTally&, const KoszulTally&) = default;
  std::string to_string() const {
    return "(" + std::to_string(h0) + "," + std::to_string(h1) + "," + std::to_string(h2) + ")";
  }
};

/// Finite-dimensional module given by commuting nilpotent action matrices,
/// one per ambient variable, acting on column vectors.
template <Field F>
class FiniteLengthModule {
 public:
  using Matrix = DenseMatrix<F>;

  FiniteLengthModule(F field, std::vector<std::string> basis, std::vector<Matrix> actions)
      : field_(std::move(field)), basis_(std::move(basis)), actions_(std::move(actions)) {
    const int n = static_cast<int>(basis_.size());
    for (const auto& a : actions_)
      if (a.rows() != n || a.cols() != n) throw std::invalid_argument("action matrix shape mismatch");
    for (std::size_t i = 0; i < actions_.size(); ++i)
      for (std::size_t j = i + 1; j < actions_.size(); ++j)
        if (!(actions_[i] * actions_[j] == actions_[j] * actions_[i]))
          throw std::invalid_argument("non-commuting actions");
    for (const auto& a : actions_) {
      Matrix p = Matrix::identity(field_, n);
      for (int k = 0; k < n; ++k) p = p * a;
      if (!p.is_zero()) throw std::invalid_argument("action is not nilpotent");
    }
  }

  /// The zero module over `nvars` variables.
  static FiniteLengthModule zero(F field, int nvars) {
    return FiniteLengthModule(field, {}, std::vector<Matrix>(nvars, Matrix(field, 0, 0)));
  }

  /// S/J on its standard-monomial basis; J must be primary to the origin.
  static FiniteLengthModule quotient(const Ideal<F>& J) {
    if (J.is_unit()) return zero(J.field(), J.nvars());
    if (!is_primary_to_origin(J)) throw std::invalid_argument("quotient module is not of finite length at the origin");
    auto std_monos = *standard_monomials(J);
    const int n = static_cast<int>(std_monos.size());
    std::vector<std::string> labels;
    for (const auto& m : std_monos) labels.push_back(exponent_string(m, J.nvars()));
    std::vector<Matrix> acts;
    for (int v = 0; v < J.nvars(); ++v) {
      Matrix a(J.field(), n, n);
      for (int c = 0; c < n; ++c) {
        auto img = normal_form(Polynomial<F>::monomial(J.field(), J.nvars(), std_monos[c] + ExponentVector::unit(v)), J);
        for (const auto& t : img.terms()) {
          auto it = std::find(std_monos.begin(), std_monos.end(), t.exp);
          a(static_cast<int>(it - std_monos.begin()), c) = t.coef;
        }
      }
      acts.push_back(std::move(a));
    }
    return FiniteLengthModule(J.field(), std::move(labels), std::move(acts));
  }

  const F& field() const { return field_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int nvars() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<Matrix>& actions() const { return actions_; }

  /// Matrix of multiplication by p.
  Matrix evaluate(const Polynomial<F>& p) const {
    if (p.nvars() != nvars()) throw std::invalid_argument("ambient mismatch");
    const int n = dimension();
    Matrix out(field_, n, n);
    for (const auto& t : p.terms()) {
      Matrix m = Matrix::identity(field_, n);
      for (int v = 0; v < nvars(); ++v)
        for (int k = 0; k < t.exp[v]; ++k) m = m * actions_[v];
      out = out + m.scaled(t.coef);
    }
    return out;
  }

  /// ν(M) = dim M/mM.
  int minimal_generator_count() const {
    const int n = dimension();
    if (n == 0) return 0;
    Matrix img(field_, n, 0);
    for (const auto& a : actions_) img = Matrix::hconcat(img, a);
    return n - img.rank();
  }

  /// Direct sum with block-diagonal actions.
  friend FiniteLengthModule direct_sum(const FiniteLengthModule& a, const FiniteLengthModule& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ambient mismatch");
    const int n = a.dimension(), m = b.dimension();
    std::vector<std::string> labels = a.basis_;
    labels.insert(labels.end(), b.basis_.begin(), b.basis_.end());
    std::vector<Matrix> acts;
    for (int v = 0; v < a.nvars(); ++v) {
      Matrix s(a.field_, n + m, n + m);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = a.actions_[v](i, j);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s(n + i, n + j) = b.actions_[v](i, j);
      acts.push_back(std::move(s));
    }
    return FiniteLengthModule(a.field_, std::move(labels), std::move(acts));
  }

 private:
  F field_;
  std::vector<std::string> basis_;
  std::vector<Matrix> actions_;
};

/// Exact linear algebra on 0 → M → M² → M → 0 with d2(m) = (−g m, f m) and
/// d1(a, b) = f a + g b.
template <Field F>
KoszulTally koszul_finlen(const FiniteLengthModule<F>& M, const Polynomial<F>& f, const Polynomial<F>& g) {
  const int n = M.dimension();
  if (n == 0) return {};
  auto A = M.evaluate(f), B = M.evaluate(g);
  auto d1 = DenseMatrix<F>::hconcat(A, B);
  auto d2 = DenseMatrix<F>::vconcat(-B, A);
  if (!(d1 * d2).is_zero()) throw std::logic_error("Koszul differential does not square to zero");
  const long r1 = d1.rank(), r2 = d2.rank();
  KoszulTally t{n - r1, 2L * n - r1 - r2, n - r2};
  if (t.chi() != 0) throw std::logic_error("Euler characteristic of a finite-length module is nonzero");
  return t;
}

/// Koszul homology of S/J on (f, g) from lengths: h0 = ℓ(S/(J + (f,g))),
/// h2 = ℓ((J : (f,g))/J), h1 from χ (= e((f,g); S/J) in full dimension,
/// 0 otherwise).
template <Field F>
KoszulTally koszul_cyclic(const Polynomial<F>& f, const Polynomial<F>& g, const Ideal<F>& J) {
  if (J.is_unit()) return {};
  Ideal<F> fg(J.field(), J.nvars(), {f, g}, J.order());
  auto total = ideal_sum(J, fg);
  auto h0 = colength(total);
  if (!h0 || !is_primary_to_origin(total))
    throw std::invalid_argument("koszul_cyclic: (f, g) is not primary to the origin modulo J");
  auto colon = ideal_quotient(J, fg);
  const long h2 = static_cast<long>(relative_length(colon, J));
  long chi = 0;
  if (dim_quotient(J) == 2) {
    auto e = samuel_multiplicity(fg, J, 2);
    if (!e.stabilized) throw std::runtime_error("koszul_cyclic: multiplicity did not stabilize");
    chi = e.value;
  }
  KoszulTally t{static_cast<long>(*h0), 0, h2};
  t.h1 = t.h0 + t.h2 - chi;
  return t;
}

/// Koszul homology of a nonzero ideal J through 0 → J → S → S/J → 0, using
/// that (f, g) is S-regular.
template <Field F>
KoszulTally koszul_ideal_module(const Polynomial<F>& f, const Polynomial<F>& g, const Ideal<F>& J) {
  if (J.is_zero()) throw std::invalid_argument("koszul_ideal_module: J = 0 (use a free module)");
  Ideal<F> fg(J.field(), J.nvars(), {f, g}, J.order());
  auto cS = colength(fg);
  if (!cS || !is_primary_to_origin(fg)) throw std::invalid_argument("koszul_ideal_module: (f, g) is not a system of parameters");
  auto q = koszul_cyclic(f, g, J);
  return {q.h1 + static_cast<long>(*cS) - q.h0, q.h2, 0};
}

/// ν_S(J) = ℓ(J / mJ), computed independently of any Koszul data.
template <Field F>
long ideal_minimal_generators(const Ideal<F>& J) {
  if (J.is_zero()) return 0;
  auto mJ = ideal_product(Ideal<F>::maximal(J.field(), J.nvars()).with_order(J.order()), J);
  return static_cast<long>(relative_length(J, mJ));
}

// ---------------------------------------------------------------------------

enum class SummandKind { cyclic, ideal, free, finlen };

template <Field F>
struct Summand {
  SummandKind kind;
  std::optional<Ideal<F>> ideal;  // cyclic: S/J, ideal: J
  int rank = 0;                   // free
  std::optional<FiniteLengthModule<F>> finlen;
};

/// Flat direct sum of S-modules.
template <Field F>
struct ModuleRep {
  std::vector<Summand<F>> summands;

  static ModuleRep cyclic(Ideal<F> J) { return {{{SummandKind::cyclic, std::move(J), 0, std::nullopt}}}; }
  static ModuleRep ideal(Ideal<F> J) {
    if (J.is_zero()) throw std::invalid_argument("ideal module must be nonzero");
    return {{{SummandKind::ideal, std::move(J), 0, std::nullopt}}};
  }
  static ModuleRep free(int r) { return {{{SummandKind::free, std::nullopt, r, std::nullopt}}}; }
  static ModuleRep finite_length(FiniteLengthModule<F> M) {
    return {{{SummandKind::finlen, std::nullopt, 0, std::move(M)}}};
  }

  friend ModuleRep operator+(ModuleRep a, const ModuleRep& b) {
    a.summands.insert(a.summands.end(), b.summands.begin(), b.summands.end());
    return a;
  }
};

template <Field F>
KoszulTally koszul(const Summand<F>& s, const Polynomial<F>& f, const Polynomial<F>& g) {
  switch (s.kind) {
    case SummandKind::cyclic: return koszul_cyclic(f, g, *s.ideal);
    case SummandKind::ideal: return koszul_ideal_module(f, g, *s.ideal);
    case SummandKind::finlen: return koszul_finlen(*s.finlen, f, g);
    case SummandKind::free:
    default: {
      if (s.rank == 0) return {};
      Ideal<F> fg({f, g});
      auto c = colength(fg);
      if (!c || !is_primary_to_origin(fg)) throw std::invalid_argument("koszul: (f, g) is not a system of parameters");
      return {static_cast<long>(s.rank) * static_cast<long>(*c), 0, 0};
    }
  }
}

/// Additive over the direct sum.
template <Field F>
KoszulTally koszul(const ModuleRep<F>& M, const Polynomial<F>& f, const Polynomial<F>& g) {
  KoszulTally t;
  for (const auto& s : M.summands) t += koszul(s, f, g);
  return t;
}

/// ν_S of a summand.
template <Field F>
long minimal_generators(const Summand<F>& s) {
  switch (s.kind) {
    case SummandKind::cyclic: return s.ideal->is_unit() ? 0 : 1;
    case SummandKind::ideal: return ideal_minimal_generators(*s.ideal);
    case SummandKind::finlen: return s.finlen->minimal_generator_count();
    case SummandKind::free:
    default: return s.rank;
  }
}

/// e(m; M) in dimension nvars (lower-dimensional summands contribute 0).
template <Field F>
long multiplicity(const Summand<F>& s, int nvars) {
  switch (s.kind) {
    case SummandKind::cyclic: return !s.ideal->is_unit() && dim_quotient(*s.ideal) == nvars ? 1 : 0;
    case SummandKind::ideal: return 1;
    case SummandKind::finlen: return nvars == 0 ? s.finlen->dimension() : 0;
    case SummandKind::free:
    default: return s.rank;
  }
}

// ---------------------------------------------------------------------------
// Monomial modules over a monomial subring R.

struct GradedKoszul {
  KoszulTally tally;
  /// Degree levels above the module corner that were examined.
  int levels = 0;
  /// Last level carrying nonzero homology (-1 if none).
  int last_nonzero = -1;
};

class IncreaseBound : public std::runtime_error {
 public:
  IncreaseBound(int last_nonzero)
      : std::runtime_error("INCREASE_BOUND: homology still nonzero at level " + std::to_string(last_nonzero)),
        last_nonzero_(last_nonzero) {}
  int last_nonzero() const { return last_nonzero_; }

 private:
  int last_nonzero_;
};

namespace detail {

inline void require_monomial_sop(const AffineSemigroup& R, const LatticePoint& a, const LatticePoint& b) {
  for (const auto& p : {a, b}) {
    ExponentVector e;
    if (!nonnegative(p)) throw std::invalid_argument("sop entries must be monomials of R");
    for (int i = 0; i < R.dim(); ++i) e[i] = static_cast<std::uint16_t>(p[i]);
    if (!sg_member(R, e).member) throw std::invalid_argument("sop entries must be monomials of R");
  }
  // A monomial pair is a system of parameters iff together the two
  // monomials involve pure powers of every variable.
  if (R.dim() != 2) throw std::invalid_argument("monomial Koszul homology is implemented for d = 2");
  auto pure = [](const LatticePoint& p, int axis) { return p[axis] > 0 && p[1 - axis] == 0; };
  bool ok = (pure(a, 0) && pure(b, 1)) || (pure(a, 1) && pure(b, 0));
  if (!ok) throw std::invalid_argument("monomial pair is not a system of parameters");
}

template <class Fn>
void for_each_level_point(int dim, const LatticePoint& base, int level, Fn&& fn) {
  LatticePoint w{0, 0, 0, 0};
  auto rec = [&](auto&& self, int axis, int left) -> void {
    if (axis == dim - 1) {
      w[axis] = left;
      fn(base + w);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      w[axis] = a;
      self(self, axis + 1, left - a);
    }
    w[axis] = 0;
  };
  rec(rec, 0, level);
}

}  // namespace detail

/// Z^2-graded Koszul homology of a direct sum of monomial R-modules on the
/// monomials (x^a, x^b). Each graded piece is at most one-dimensional per
/// summand; the complex is assembled and ranked degree by degree. A bound is
/// accepted once a trailing window of max deg(a, b) levels carries no homology.
inline GradedKoszul koszul_monomial_R(const std::vector<MonomialModule>& mods, const LatticePoint& a,
                                      const LatticePoint& b, int max_levels = 400) {
  GradedKoszul out;
  if (mods.empty()) return out;
  const AffineSemigroup& R = mods.front().ring();
  for (const auto& M : mods)
    if (!(M.ring() == R)) throw std::invalid_argument("summands over different rings");
  detail::require_monomial_sop(R, a, b);
  const int width = std::max(lattice_degree(a), lattice_degree(b));
  const int dim = R.dim();
  LatticePoint base = mods.front().corner();
  int reach = 0;
  for (const auto& M : mods) {
    auto c = M.corner();
    for (int i = 0; i < dim; ++i) base[i] = std::min(base[i], c[i]);
  }
  for (const auto& M : mods)
    reach = std::max(reach, M.max_generator_degree() - lattice_degree(base) + M.ring_gaps().max_gap_degree() + 1);
  int target = reach + lattice_degree(a) + lattice_degree(b) + width;
  RationalField Q;
  for (int level = 0;; ++level) {
    if (level > max_levels) throw IncreaseBound(out.last_nonzero);
    long h0 = 0, h1 = 0, h2 = 0;
    detail::for_each_level_point(dim, base, level, [&](const LatticePoint& v) {
      for (const auto& M : mods) {
        int k0 = M.contains(v) ? 1 : 0;
        bool ina = M.contains(v - a), inb = M.contains(v - b);
        int k1 = (ina ? 1 : 0) + (inb ? 1 : 0);
        int k2 = M.contains(v - a - b) ? 1 : 0;
        DenseMatrix<RationalField> d1(Q, k0, k1), d2(Q, k1, k2);
        if (k0) {
          int c = 0;
          if (ina) d1(0, c++) = 1;
          if (inb) d1(0, c++) = 1;
        }
        if (k2) {
          // d2(m) = (−x^b m, x^a m); k2 = 1 forces both middle pieces.
          d2(0, 0) = -1;
          d2(1, 0) = 1;
        }
        int r1 = d1.rank(), r2 = d2.rank();
        h0 += k0 - r1;
        h1 += k1 - r1 - r2;
        h2 += k2 - r2;
      }
    });
    out.tally += KoszulTally{h0, h1, h2};
    if (h0 || h1 || h2) out.last_nonzero = level;
    out.levels = level + 1;
    if (level >= target && level - out.last_nonzero >= width) break;
  }
  return out;
}

inline GradedKoszul koszul_monomial_R(const MonomialModule& M, const LatticePoint& a, const LatticePoint& b,
                                      int max_levels = 400) {
  return koszul_monomial_R(std::vector<MonomialModule>{M}, a, b, max_levels);
}

struct ColonModule {
  /// Lattice points of (M : (x^{ta}, x^{tb})) not in M.
  std::vector<LatticePoint> points;
  long length = 0;
  /// h1(x^{ta}, x^{tb}; M) from the graded Koszul computation.
  long h1 = 0;
  bool agrees = false;
};

/// (M :_{M⊗K} (x^{ta}, x^{tb})) / M for a direct sum of monomial modules.
inline ColonModule colon_module(const std::vector<MonomialModule>& mods, int t, const LatticePoint& a,
                                const LatticePoint& b, int max_levels = 400) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  LatticePoint ta{}, tb{};
  for (int i = 0; i < 4; ++i) {
    ta[i] = t * a[i];
    tb[i] = t * b[i];
  }
  ColonModule out;
  out.h1 = koszul_monomial_R(mods, ta, tb, max_levels).tally.h1;
  for (const auto& M : mods) {
    if (M.generators().empty()) continue;
    const int dim = M.dim();
    LatticePoint base = M.corner() - ta - tb;
    const int width = std::max(lattice_degree(ta), lattice_degree(tb)) + M.ring().max_generator_degree();
    const int target = M.max_generator_degree() - lattice_degree(base) + M.ring_gaps().max_gap_degree() + width + 1;
    int last = -1;
    for (int level = 0;; ++level) {
      if (level > max_levels) throw IncreaseBound(last);
      detail::for_each_level_point(dim, base, level, [&](const LatticePoint& v) {
        if (!M.contains(v) && M.contains(v + ta) && M.contains(v + tb)) {
          out.points.push_back(v);
          last = level;
        }
      });
      if (level >= target && level - last >= width) break;
    }
  }
  out.length = static_cast<long>(out.points.size());
  out.agrees = out.length == out.h1;
  return out;
}

inline ColonModule colon_module(const MonomialModule& M, int t, const LatticePoint& a, const LatticePoint& b) {
  return colon_module(std::vector<MonomialModule>{M}, t, a, b);
}

}  // namespace ulrich
