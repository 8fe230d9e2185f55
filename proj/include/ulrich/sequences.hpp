#pragma once

#include <functional>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ulrich/koszul.hpp"
#include "ulrich/parse.hpp"

namespace ulrich {

/// Polynomial in the family index n with rational coefficients (c[i] is the
/// coefficient of n^i).
struct IndexPolynomial {
  std::vector<mpq_class> c;

  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[i] != 0) return i;
    return -1;
  }
  mpq_class leading() const { return degree() < 0 ? mpq_class(0) : c[degree()]; }
  mpq_class operator()(long n) const {
    mpq_class v = 0, p = 1;
    for (const auto& a : c) {
      v += a * p;
      p *= n;
    }
    return v;
  }
  std::string to_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::string s;
    for (int i = d; i >= 0; --i) {
      if (c[i] == 0) continue;
      mpq_class a = c[i];
      bool neg = a < 0;
      if (neg) a = -a;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "n" : "n^" + std::to_string(i));
      if (mono.empty()) s += a.get_str();
      else if (a == 1) s += mono;
      else s += a.get_str() + "*" + mono;
    }
    return s;
  }
  bool single_term() const {
    int count = 0;
    for (const auto& a : c) count += a != 0;
    return count <= 1;
  }
};

/// Exact polynomial pattern of a sequence on consecutive indices: the lowest
/// order k whose k-th differences are constant on at least three values, over
/// at least four indices.
inline std::optional<IndexPolynomial> fit_polynomial(long n0, const std::vector<long>& values) {
  const int L = static_cast<int>(values.size());
  if (L < 4) return std::nullopt;
  std::vector<std::vector<mpq_class>> diffs{{values.begin(), values.end()}};
  for (int k = 0; k + 3 <= L; ++k) {
    const auto& d = diffs.back();
    bool constant = true;
    for (std::size_t i = 1; i < d.size(); ++i) constant = constant && d[i] == d[0];
    if (constant) {
      // Newton form p(n) = Σ_j Δ^j v(n0) · C(n − n0, j).
      IndexPolynomial p;
      p.c.assign(static_cast<std::size_t>(k) + 1, 0);
      std::vector<mpq_class> binom{1};  // coefficients of C(n − n0, j) in n
      for (int j = 0; j <= k; ++j) {
        for (std::size_t i = 0; i < binom.size(); ++i) p.c[i] += diffs[j][0] * binom[i];
        // C(m, j+1) = C(m, j) · (m − j) / (j + 1), m = n − n0
        std::vector<mpq_class> next(binom.size() + 1, 0);
        for (std::size_t i = 0; i < binom.size(); ++i) {
          next[i + 1] += binom[i];
          next[i] -= binom[i] * mpq_class(n0 + j);
        }
        for (auto& a : next) a /= (j + 1);
        binom = std::move(next);
      }
      for (std::size_t i = 0; i < values.size(); ++i)
        if (p(n0 + static_cast<long>(i)) != values[i]) return std::nullopt;
      return p;
    }
    std::vector<mpq_class> nd;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) nd.push_back(d[i + 1] - d[i]);
    diffs.push_back(std::move(nd));
  }
  return std::nullopt;
}

enum class LimitKind { zero, finite_nonzero, infinite, unknown };

struct RatioLimit {
  LimitKind kind = LimitKind::unknown;
  mpq_class value = 0;
  /// True when both numerator and denominator have a certified closed form.
  bool exact = false;
  std::string formula;

  bool is_zero() const { return kind == LimitKind::zero; }
  bool is_one() const { return kind == LimitKind::finite_nonzero && value == 1; }
  bool nonzero() const { return kind == LimitKind::finite_nonzero || kind == LimitKind::infinite; }
  std::string describe() const {
    std::string v;
    switch (kind) {
      case LimitKind::zero: v = "0"; break;
      case LimitKind::finite_nonzero: v = value.get_str(); break;
      case LimitKind::infinite: v = "inf"; break;
      default: v = "unknown";
    }
    return v + (exact ? " (exact)" : " (finite-index evidence)");
  }
};

inline std::string ratio_formula(const IndexPolynomial& a, const IndexPolynomial& b) {
  if (a.degree() < 0) return "0";
  if (a.c == b.c) return "1";
  if (a.degree() <= 0 && b.degree() <= 0) {
    if (b.leading() == 0) return "undefined";
    mpq_class r = a.leading() / b.leading();
    return r.get_str();
  }
  auto wrap = [](const IndexPolynomial& p) {
    return p.single_term() ? p.to_string() : "(" + p.to_string() + ")";
  };
  return wrap(a) + "/" + wrap(b);
}

/// lim a_n / b_n from closed forms when available, otherwise from the tail.
inline RatioLimit ratio_limit(long n0, const std::vector<long>& a, const std::vector<long>& b) {
  RatioLimit out;
  auto fa = fit_polynomial(n0, a), fb = fit_polynomial(n0, b);
  if (fa && fb && fb->degree() >= 0) {
    out.exact = true;
    out.formula = ratio_formula(*fa, *fb);
    int da = fa->degree(), db = fb->degree();
    if (da < db) {
      out.kind = LimitKind::zero;
    } else if (da > db) {
      out.kind = LimitKind::infinite;
    } else {
      out.value = fa->leading() / fb->leading();
      out.kind = out.value == 0 ? LimitKind::zero : LimitKind::finite_nonzero;
    }
    return out;
  }
  const std::size_t L = a.size();
  if (L < 3) return out;
  std::vector<mpq_class> r;
  for (std::size_t i = 0; i < L; ++i) r.push_back(b[i] ? mpq_class(a[i], b[i]) : mpq_class(0));
  for (auto& q : r) q.canonicalize();
  out.formula = "tail " + r[L - 3].get_str() + ", " + r[L - 2].get_str() + ", " + r[L - 1].get_str();
  bool decreasing = r[L - 1] < r[L - 2] && r[L - 2] < r[L - 3];
  if (decreasing && r[L - 1] >= 0 && r[L - 1] * 2 < r[0]) {
    out.kind = LimitKind::zero;
  } else if (r[L - 1] > 0 && r[L - 1] >= r[L - 2] && r[L - 2] >= r[L - 3]) {
    out.kind = LimitKind::finite_nonzero;
    out.value = r[L - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

template <Field F>
struct SequenceFamily {
  std::string description;
  std::function<ModuleRep<F>(int)> rule;
  Polynomial<F> f, g;  // system of parameters
  int n_min = 1, n_max = 12;
};

struct AsymptoticRow {
  long n = 0, nu = 0, e = 0;
  KoszulTally tally;
  long chi1() const { return tally.chi1(); }
  static std::string ratio(long a, long b) {
    if (b == 0) return "undefined";
    mpq_class q(a, b);
    q.canonicalize();
    return q.get_str();
  }
};

enum class SequenceVerdict { lim_ulrich, lim_cm, weakly_lim_cm, not_lim_cm, inconclusive };

inline std::string to_string(SequenceVerdict v) {
  switch (v) {
    case SequenceVerdict::lim_ulrich: return "LIM_ULRICH_TREND";
    case SequenceVerdict::lim_cm: return "LIM_CM_TREND";
    case SequenceVerdict::weakly_lim_cm: return "WEAKLY_LIM_CM_TREND";
    case SequenceVerdict::not_lim_cm: return "NOT_LIM_CM_EVIDENCE";
    default: return "INCONCLUSIVE";
  }
}

struct AsymptoticTable {
  std::string description;
  std::vector<AsymptoticRow> rows;
  RatioLimit e_over_nu, h1_over_nu, h2_over_nu, chi1_over_nu;
  SequenceVerdict verdict = SequenceVerdict::inconclusive;
  bool exact = false;
};

/// Classifies from the four ratio limits.
inline void classify(AsymptoticTable& t) {
  long n0 = t.rows.empty() ? 1 : t.rows.front().n;
  std::vector<long> nu, e, h1, h2, chi1;
  for (const auto& r : t.rows) {
    nu.push_back(r.nu);
    e.push_back(r.e);
    h1.push_back(r.tally.h1);
    h2.push_back(r.tally.h2);
    chi1.push_back(r.chi1());
  }
  t.e_over_nu = ratio_limit(n0, e, nu);
  t.h1_over_nu = ratio_limit(n0, h1, nu);
  t.h2_over_nu = ratio_limit(n0, h2, nu);
  t.chi1_over_nu = ratio_limit(n0, chi1, nu);
  const bool lim_cm = t.h1_over_nu.is_zero() && t.h2_over_nu.is_zero();
  if (lim_cm) {
    bool ulrich = t.e_over_nu.is_one();
    t.verdict = ulrich ? SequenceVerdict::lim_ulrich : SequenceVerdict::lim_cm;
    t.exact = t.h1_over_nu.exact && t.h2_over_nu.exact && (!ulrich || t.e_over_nu.exact);
  } else if (t.chi1_over_nu.is_zero()) {
    t.verdict = SequenceVerdict::weakly_lim_cm;
    t.exact = t.chi1_over_nu.exact;
  } else if (t.chi1_over_nu.nonzero()) {
    t.verdict = SequenceVerdict::not_lim_cm;
    t.exact = t.chi1_over_nu.exact;
  } else {
    t.verdict = SequenceVerdict::inconclusive;
    t.exact = false;
  }
}

template <Field F>
AsymptoticRow module_row(long n, const ModuleRep<F>& M, const Polynomial<F>& f, const Polynomial<F>& g) {
  AsymptoticRow r;
  r.n = n;
  for (const auto& s : M.summands) {
    r.nu += minimal_generators(s);
    r.e += multiplicity(s, f.nvars());
  }
  r.tally = koszul(M, f, g);
  if (r.chi1() < 0) throw std::logic_error("negative chi1");
  return r;
}

template <Field F>
AsymptoticTable analyze(const SequenceFamily<F>& fam) {
  AsymptoticTable t;
  t.description = fam.description;
  for (int n = fam.n_min; n <= fam.n_max; ++n) {
    ModuleRep<F> M;
    try {
      M = fam.rule(n);
    } catch (const std::exception& ex) {
      throw std::runtime_error("module construction failed at n = " + std::to_string(n) + ": " + ex.what());
    }
    if (M.summands.empty()) throw std::runtime_error("zero module at n = " + std::to_string(n));
    t.rows.push_back(module_row(n, M, fam.f, fam.g));
  }
  classify(t);
  return t;
}

/// (a, b) = (h0, h1)(x, y; J) for a nonzero ideal J.
template <Field F>
std::pair<long, long> resolution_ranks(const Ideal<F>& J) {
  auto x = Polynomial<F>::variable(J.field(), J.nvars(), 0);
  auto y = Polynomial<F>::variable(J.field(), J.nvars(), 1);
  auto t = koszul_ideal_module(x, y, J);
  return {t.h0, t.h1};
}

// ---------------------------------------------------------------------------

/// Records a_n ∼ b_n judgments: (a_n − b_n)/ν_n → 0.
class EquivRelationLedger {
 public:
  struct Entry {
    std::string a, b;
    std::vector<long> a_values, b_values;
    RatioLimit limit;
    bool equivalent() const { return limit.is_zero(); }
  };

  EquivRelationLedger(long n0, std::vector<long> normalizer) : n0_(n0), nu_(std::move(normalizer)) {}

  const Entry& record(std::string a, std::vector<long> av, std::string b, std::vector<long> bv) {
    if (av.size() != nu_.size() || bv.size() != nu_.size()) throw std::invalid_argument("ledger length mismatch");
    std::vector<long> d;
    for (std::size_t i = 0; i < av.size(); ++i) d.push_back(av[i] - bv[i]);
    Entry e{std::move(a), std::move(b), std::move(av), std::move(bv), ratio_limit(n0_, d, nu_)};
    entries_.push_back(std::move(e));
    return entries_.back();
  }

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<long>& normalizer() const { return nu_; }

  /// For every pair of exactly-equivalent entries sharing a middle term,
  /// recomputes the composite judgment and requires it to be equivalent.
  bool transitive() const {
    for (const auto& p : entries_)
      for (const auto& q : entries_) {
        if (!p.equivalent() || !q.equivalent() || !p.limit.exact || !q.limit.exact) continue;
        if (p.b != q.a) continue;
        std::vector<long> d;
        for (std::size_t i = 0; i < nu_.size(); ++i) d.push_back(p.a_values[i] - q.b_values[i]);
        auto l = ratio_limit(n0_, d, nu_);
        if (!l.is_zero()) return false;
      }
    return true;
  }

 private:
  long n0_;
  std::vector<long> nu_;
  std::vector<Entry> entries_;
};

template <Field F>
struct TorsionReduction {
  AsymptoticTable original, reduced;
  EquivRelationLedger ledger{1, {}};
  std::vector<long> torsion_nu, torsion_chi1, torsion_h0;
  /// Per index: h1(M̄) = χ1(M) − (h0(M) − h0(M̄)).
  std::vector<bool> identity_holds;
  /// Per index: χ1(C) = h0(C).
  std::vector<bool> torsion_chi1_is_h0;
};

template <Field F>
bool is_torsion_summand(const Summand<F>& s) {
  if (s.kind == SummandKind::finlen) return true;
  if (s.kind == SummandKind::cyclic) {
    if (s.ideal->is_zero()) return false;
    if (is_primary_to_origin(*s.ideal) || s.ideal->is_unit()) return true;
    throw std::invalid_argument("torsion_reduce: cyclic summand is neither free nor of finite length");
  }
  return false;
}

/// Strips the finite-length summands C_n of M_n = C_n ⊕ M̄_n and records the
/// bookkeeping between the two families.
template <Field F>
TorsionReduction<F> torsion_reduce(const SequenceFamily<F>& fam) {
  TorsionReduction<F> out;
  SequenceFamily<F> reduced = fam;
  reduced.description = fam.description + " (torsion removed)";
  reduced.rule = [rule = fam.rule](int n) {
    ModuleRep<F> M = rule(n), R;
    for (const auto& s : M.summands)
      if (!is_torsion_summand(s)) R.summands.push_back(s);
    return R;
  };
  out.original = analyze(fam);
  out.reduced = analyze(reduced);
  std::vector<long> nu, zero;
  for (int n = fam.n_min; n <= fam.n_max; ++n) {
    ModuleRep<F> C;
    for (const auto& s : fam.rule(n).summands)
      if (is_torsion_summand(s)) C.summands.push_back(s);
    auto row = C.summands.empty() ? AsymptoticRow{n, 0, 0, {}} : module_row(n, C, fam.f, fam.g);
    out.torsion_nu.push_back(row.nu);
    out.torsion_chi1.push_back(row.chi1());
    out.torsion_h0.push_back(row.tally.h0);
    out.torsion_chi1_is_h0.push_back(row.chi1() == row.tally.h0);
  }
  for (std::size_t i = 0; i < out.original.rows.size(); ++i) {
    const auto& M = out.original.rows[i];
    const auto& Mb = out.reduced.rows[i];
    nu.push_back(M.nu);
    zero.push_back(0);
    out.identity_holds.push_back(Mb.tally.h1 == M.chi1() - (M.tally.h0 - Mb.tally.h0));
  }
  out.ledger = EquivRelationLedger(fam.n_min, nu);
  out.ledger.record("nu(C_n)", out.torsion_nu, "0", zero);
  out.ledger.record("chi1(C_n)", out.torsion_chi1, "0", zero);
  std::vector<long> nu_bar, h0, h0_bar;
  for (std::size_t i = 0; i < out.original.rows.size(); ++i) {
    nu_bar.push_back(out.reduced.rows[i].nu);
    h0.push_back(out.original.rows[i].tally.h0);
    h0_bar.push_back(out.reduced.rows[i].tally.h0);
  }
  out.ledger.record("nu(M_n)", nu, "nu(Mbar_n)", nu_bar);
  out.ledger.record("h0(M_n)", h0, "h0(Mbar_n)", h0_bar);
  return out;
}

// ---------------------------------------------------------------------------
// Families of monomial R-modules and their S-saturations.

struct MonomialFamily {
  std::string description;
  AffineSemigroup ring;
  std::function<MonomialModule(int)> rule;
  int n_min = 1, n_max = 12;
};

struct SaturationRow {
  long n = 0;
  long nu_R_M = 0, nu_R_MS = 0, nu_S_MS = 0;
  long quotient_length = 0;  // ℓ(M S / M)
  long h1 = 0;               // h1(x^t, y^t; M) over R
  long e_M = 0, e_MS = 0;
  KoszulTally s_tally;       // (x, y) on M S as an S-module
  bool length_bound = false; // ℓ(MS/M) ≤ h1
  bool generator_bound = false;  // ν_R(MS) ≤ ν_R(S) ν_S(MS)
  bool multiplicity_equal = false;
};

struct SaturationReport {
  std::string description;
  int t = 0;  // m_S^t ⊆ R
  long nu_R_S = 0;
  std::vector<SaturationRow> rows;
  EquivRelationLedger ledger{1, {}};
  AsymptoticTable s_side;
};

/// Smallest t with every monomial of degree ≥ t in R.
inline int conductor_degree(const AffineSemigroup& R) {
  auto gaps = find_gap_set(R);
  if (!gaps.finite) throw std::invalid_argument("ring has an infinite gap set");
  return gaps.max_gap_degree() + 1;
}

/// Minimal monomial generators of M·S as an ideal of S, shifted to the corner.
template <Field F>
Ideal<F> saturation_ideal(const MonomialModule& M, const F& field = F{}) {
  auto sat = M.saturation();
  auto corner = sat.corner();
  std::vector<Polynomial<F>> gens;
  for (const auto& m : sat.generators()) {
    bool redundant = false;
    for (const auto& o : sat.generators())
      if (o != m && nonnegative(m - o)) redundant = true;
    if (redundant) continue;
    ExponentVector e;
    for (int i = 0; i < M.dim(); ++i) e[i] = static_cast<std::uint16_t>(m[i] - corner[i]);
    gens.push_back(Polynomial<F>::monomial(field, M.dim(), e));
  }
  return Ideal<F>(field, M.dim(), std::move(gens));
}

template <Field F>
SaturationReport saturate_over_S(const MonomialFamily& fam, const F& field = F{}) {
  SaturationReport rep;
  rep.description = fam.description;
  const auto& R = fam.ring;
  if (R.dim() != 2) throw std::invalid_argument("saturate_over_S is implemented for d = 2");
  rep.t = conductor_degree(R);
  LatticePoint a{rep.t, 0, 0, 0}, b{0, rep.t, 0, 0};
  rep.nu_R_S = MonomialModule(R, {{0, 0, 0, 0}}).saturation().minimal_generator_count();
  auto x = Polynomial<F>::variable(field, 2, 0), y = Polynomial<F>::variable(field, 2, 1);
  std::vector<long> nuM, nuMS;
  for (int n = fam.n_min; n <= fam.n_max; ++n) {
    auto M = fam.rule(n);
    if (!(M.ring() == R)) throw std::invalid_argument("family module over a different ring");
    auto MS = M.saturation();
    SaturationRow row;
    row.n = n;
    row.nu_R_M = M.minimal_generator_count();
    row.nu_R_MS = MS.minimal_generator_count();
    row.nu_S_MS = MS.saturation_generator_count();
    row.quotient_length = static_cast<long>(M.saturation_quotient_basis().size());
    row.h1 = koszul_monomial_R(M, a, b).tally.h1;
    row.e_M = M.multiplicity().value;
    row.e_MS = MS.multiplicity().value;
    row.s_tally = koszul_ideal_module(x, y, saturation_ideal(M, field));
    row.length_bound = row.quotient_length <= row.h1;
    row.generator_bound = row.nu_R_MS <= rep.nu_R_S * row.nu_S_MS;
    row.multiplicity_equal = row.e_M == row.e_MS;
    nuM.push_back(row.nu_R_M);
    nuMS.push_back(row.nu_R_MS);
    rep.rows.push_back(row);
    AsymptoticRow s;
    s.n = n;
    s.nu = row.nu_S_MS;
    s.e = 1;
    s.tally = row.s_tally;
    rep.s_side.rows.push_back(s);
  }
  rep.ledger = EquivRelationLedger(fam.n_min, nuM);
  rep.ledger.record("nu_R(M_n)", nuM, "nu_R(M_nS)", nuMS);
  rep.s_side.description = fam.description + " saturated, as S-modules";
  classify(rep.s_side);
  return rep;
}

// ---------------------------------------------------------------------------
// Family descriptions.

namespace detail {

inline std::string substitute_index(const std::string& text, int n) {
  static const std::regex word("\\bn\\b");
  return std::regex_replace(text, word, std::to_string(n));
}

inline std::vector<std::pair<std::string, std::string>> key_values(std::string_view text, std::string& kind) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto word = [&] {
    std::size_t s = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '=') ++pos;
    return std::string(text.substr(s, pos - s));
  };
  skip();
  kind = word();
  if (kind == "family") {
    skip();
    kind = word();
  }
  std::vector<std::pair<std::string, std::string>> kv;
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    std::string key = word();
    if (pos >= text.size() || text[pos] != '=') throw std::invalid_argument("family spec: expected key=value after " + key);
    ++pos;
    std::size_t s = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
      ++pos;
    }
    kv.emplace_back(key, std::string(text.substr(s, pos - s)));
  }
  return kv;
}

inline std::string lookup(const std::vector<std::pair<std::string, std::string>>& kv, const std::string& key,
                          const std::string& fallback = "") {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  if (fallback.empty()) throw std::invalid_argument("family spec: missing " + key + "=");
  return fallback;
}

inline long eval_growth(const std::string& expr, int n) {
  RationalField Q;
  auto p = parse_polynomial<RationalField>(expr, Ambient({"n"}), Q);
  mpq_class v = 0;
  for (const auto& t : p.terms()) {
    mpq_class m = t.coef;
    for (int k = 0; k < t.exp[0]; ++k) m *= n;
    v += m;
  }
  if (v.get_den() != 1 || v < 0) throw std::invalid_argument("growth must be a non-negative integer");
  return v.get_num().get_si();
}

}  // namespace detail

/// True for families of monomial R-modules (`rprincipal`, `rself`, `rsat`).
inline bool is_monomial_family(std::string_view text) {
  std::string kind;
  detail::key_values(text, kind);
  return kind == "rprincipal" || kind == "rself" || kind == "rsat";
}

/// S-module families over k[x, y]:
///   freeplus ideal=J(n) growth=g(n)   S^{g(n)} ⊕ J(n)
///   powers ideal=J(n)                 J(n)
///   free growth=g(n)                  S^{g(n)}
///   torsionplus quotient=J(n) growth=g(n)   S/J(n) ⊕ S^{g(n)}
template <Field F>
SequenceFamily<F> parse_family(std::string_view text, int n_min, int n_max, const F& field = F{}) {
  std::string kind;
  auto kv = detail::key_values(text, kind);
  auto A = Ambient::xy();
  auto ideal_at = [A, field](const std::string& expr, int n) {
    return Ideal<F>(field, 2, parse_generators<F>(detail::substitute_index(expr, n), A, field));
  };
  SequenceFamily<F> fam{std::string(text), {}, Polynomial<F>::variable(field, 2, 0),
                        Polynomial<F>::variable(field, 2, 1), n_min, n_max};
  if (kind == "freeplus") {
    auto I = detail::lookup(kv, "ideal"), g = detail::lookup(kv, "growth");
    fam.rule = [=](int n) {
      return ModuleRep<F>::free(static_cast<int>(detail::eval_growth(g, n))) + ModuleRep<F>::ideal(ideal_at(I, n));
    };
  } else if (kind == "powers" || kind == "ideal") {
    auto I = detail::lookup(kv, "ideal");
    fam.rule = [=](int n) { return ModuleRep<F>::ideal(ideal_at(I, n)); };
  } else if (kind == "free") {
    auto g = detail::lookup(kv, "growth");
    fam.rule = [=](int n) { return ModuleRep<F>::free(static_cast<int>(detail::eval_growth(g, n))); };
  } else if (kind == "torsionplus") {
    auto I = detail::lookup(kv, "quotient"), g = detail::lookup(kv, "growth");
    fam.rule = [=](int n) {
      auto M = ModuleRep<F>::cyclic(ideal_at(I, n));
      long r = detail::eval_growth(g, n);
      if (r > 0) M = M + ModuleRep<F>::free(static_cast<int>(r));
      return M;
    };
  } else {
    throw std::invalid_argument("unknown family kind '" + kind + "'");
  }
  return fam;
}

/// Monomial families over R_k = no_ulrich_semigroup(k), selected by ring=k:
///   rprincipal   R·x^{kn}
///   rself        R
///   rsat         R·S (an S-module)
inline MonomialFamily parse_monomial_family(std::string_view text, int n_min, int n_max) {
  std::string kind;
  auto kv = detail::key_values(text, kind);
  int k = std::stoi(detail::lookup(kv, "ring", "2"));
  auto R = no_ulrich_semigroup(k);
  MonomialFamily fam{std::string(text), R, {}, n_min, n_max};
  if (kind == "rprincipal") {
    fam.rule = [R, k](int n) { return MonomialModule(R, {{k * n, 0, 0, 0}}); };
  } else if (kind == "rself") {
    fam.rule = [R](int) { return MonomialModule(R, {{0, 0, 0, 0}}); };
  } else if (kind == "rsat") {
    fam.rule = [R](int) { return MonomialModule(R, {{0, 0, 0, 0}}).saturation(); };
  } else {
    throw std::invalid_argument("unknown monomial family kind '" + kind + "'");
  }
  return fam;
}

}  // namespace ulrich
