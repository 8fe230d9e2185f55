#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/groebner.hpp"
#include "ulrich/subring.hpp"

namespace ulrich {

enum class ReductionKind { positive, negative_multiplicity, inconclusive };

inline std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::positive: return "POSITIVE";
    case ReductionKind::negative_multiplicity: return "NEGATIVE_MULTIPLICITY";
    default: return "INCONCLUSIVE";
  }
}

struct ReductionCertificate {
  ReductionKind kind = ReductionKind::inconclusive;
  /// POSITIVE: J^{t+1} = I·J^t.
  int t = -1;
  /// Filled whenever the multiplicity branch ran.
  long e_I = 0, e_J = 0;
  int t_max = 0;
  /// POSITIVE only: equality rechecked from freshly computed powers.
  bool reverified = false;

  bool positive() const { return kind == ReductionKind::positive; }
  std::string describe() const {
    switch (kind) {
      case ReductionKind::positive: return "POSITIVE(t=" + std::to_string(t) + ")";
      case ReductionKind::negative_multiplicity:
        return "NEGATIVE_MULTIPLICITY(" + std::to_string(e_I) + ", " + std::to_string(e_J) + ")";
      default: return "INCONCLUSIVE(t_max=" + std::to_string(t_max) + ")";
    }
  }
};

/// Decides whether I is a reduction of J (I ⊆ J, both primary to the origin).
/// The negative branch compares multiplicities; that is sound because the
/// ambient polynomial ring is regular, hence formally equidimensional at the
/// origin.
template <Field F>
ReductionCertificate is_reduction(const Ideal<F>& I, const Ideal<F>& J, int t_max = 12) {
  check_same_ambient(I, J);
  if (!is_subset(I, J)) throw std::invalid_argument("is_reduction: I is not contained in J");
  if (!is_primary_to_origin(I) || !is_primary_to_origin(J))
    throw std::invalid_argument("is_reduction: ideals must have finite colength at the origin");
  ReductionCertificate cert;
  cert.t_max = t_max;
  Ideal<F> Jt = Ideal<F>::unit(J.field(), J.nvars()).with_order(J.order());
  for (int t = 0; t <= t_max; ++t) {
    auto Jt1 = ideal_product(Jt, J);
    Jt1 = Jt1.with_generators(Jt1.basis());
    // I·J^t ⊆ J^{t+1} always; only the reverse inclusion needs checking.
    if (is_subset(Jt1, ideal_product(I, Jt))) {
      cert.kind = ReductionKind::positive;
      cert.t = t;
      auto lhs = ideal_power(J, t + 1);
      auto rhs = ideal_product(I, ideal_power(J, t));
      cert.reverified = ideals_equal(lhs, rhs);
      if (!cert.reverified) throw std::logic_error("reduction certificate failed re-verification");
      return cert;
    }
    Jt = Jt1;
  }
  auto eI = ideal_multiplicity(I);
  auto eJ = ideal_multiplicity(J);
  if (eI.stabilized && eJ.stabilized) {
    cert.e_I = eI.value;
    cert.e_J = eJ.value;
    if (eI.value != eJ.value) cert.kind = ReductionKind::negative_multiplicity;
  }
  return cert;
}

/// z ∈ Ī iff I is a reduction of I + (z).
template <Field F>
ReductionCertificate is_integral(const Polynomial<F>& z, const Ideal<F>& I, int t_max = 12) {
  auto gens = I.generators();
  gens.push_back(z);
  return is_reduction(I, I.with_generators(std::move(gens)), t_max);
}

template <Field F>
struct MinimalReductionReport {
  bool confirmed = false;
  std::vector<Polynomial<F>> generators;
  std::vector<ReductionCertificate> certificates;
  /// Index of the first generator without a POSITIVE certificate.
  std::optional<std::size_t> witness;
  std::size_t colength = 0;
};

/// Checks that u generates a minimal reduction of m_R: d elements of R, (u)S
/// primary to the origin, and every generator of R integral over (u)S.
template <Field F>
MinimalReductionReport<F> verify_minimal_reduction(const PresentedSubring<F>& R, const std::vector<Polynomial<F>>& u,
                                                   int t_max = 12) {
  for (const auto& ui : u)
    if (!subalgebra_member(R, ui).member)
      throw std::invalid_argument("verify_minimal_reduction: " + to_string(ui, R.ambient()) + " is not in R");
  if (static_cast<int>(u.size()) != R.nvars())
    throw std::invalid_argument("verify_minimal_reduction: need exactly dim R elements");
  Ideal<F> I(R.field(), R.nvars(), u);
  auto col = colength(I);
  if (!col || !is_primary_to_origin(I))
    throw std::invalid_argument("verify_minimal_reduction: (u)S does not have finite colength");
  MinimalReductionReport<F> rep;
  rep.colength = *col;
  rep.generators = R.generators();
  rep.confirmed = true;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    auto c = is_integral(rep.generators[i], I, t_max);
    if (!c.positive() && rep.confirmed) {
      rep.confirmed = false;
      rep.witness = i;
    }
    rep.certificates.push_back(c);
  }
  return rep;
}

// ---------------------------------------------------------------------------

template <Field F>
struct BuilderParams {
  Ambient ambient;
  std::vector<Polynomial<F>> u;
  Polynomial<F> f;
  /// (v_j, w_j) for each variable x_j.
  std::vector<std::pair<Polynomial<F>, Polynomial<F>>> multipliers;
  std::vector<Polynomial<F>> extras;
};

class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(const std::string& clause) : std::invalid_argument(clause) {}
};

struct BuilderCheck {
  std::string clause;
  bool passed = false;
  std::string certificate;
};

template <Field F>
struct BuiltRing {
  PresentedSubring<F> ring;
  std::vector<BuilderCheck> checks;
};

/// R = k[u][f][v_j x_j, w_j x_j][extras], emitted only after every hypothesis
/// has been certified.
template <Field F>
BuiltRing<F> build_ring(const BuilderParams<F>& p, int t_max = 12) {
  using P = Polynomial<F>;
  const int d = p.ambient.size();
  const F& field = p.f.field();
  std::vector<BuilderCheck> checks;
  if (static_cast<int>(p.u.size()) != d) throw HypothesisError("u must have d elements");
  if (static_cast<int>(p.multipliers.size()) != d) throw HypothesisError("one multiplier pair per variable");

  Ideal<F> I(field, d, p.u);
  auto col = colength(I);
  if (!col || !is_primary_to_origin(I)) throw HypothesisError("(u) colength infinite");
  checks.push_back({"(u) primary to the origin", true, "colength " + std::to_string(*col)});

  if (contains(I, p.f)) throw HypothesisError("f ∈ I");
  auto nf = normal_form(p.f, I);
  auto integral = is_integral(p.f, I, t_max);
  if (!integral.positive()) throw HypothesisError("f not integral over I");
  checks.push_back({"f ∈ Ī − I", true,
                    integral.describe() + "; NF(f, I) = " + to_string(nf, p.ambient)});

  std::vector<P> base = p.u;
  base.push_back(p.f);
  PresentedSubring<F> so_far(p.ambient, base, field);
  std::vector<P> gens = base;
  for (int j = 0; j < d; ++j) {
    const auto& [v, w] = p.multipliers[j];
    auto c = colength(Ideal<F>(field, d, {v, w}));
    if (!c) throw HypothesisError("(v_j, w_j) colength infinite");
    if (!subalgebra_member(so_far, v).member || !subalgebra_member(so_far, w).member)
      throw HypothesisError("(v_j, w_j) not in k[u, f]");
    checks.push_back({"(v_" + std::to_string(j + 1) + ", w_" + std::to_string(j + 1) + ") multiplier pair", true,
                      "colength " + std::to_string(*c) + "; both in k[u, f]"});
    auto xj = P::variable(field, d, j);
    gens.push_back(v * xj);
    gens.push_back(w * xj);
  }
  for (const auto& g : p.extras) gens.push_back(g);
  std::vector<P> unique;
  for (auto& g : gens) {
    bool dup = false;
    for (const auto& q : unique) dup = dup || q == g;
    if (!dup) unique.push_back(std::move(g));
  }
  return {PresentedSubring<F>(p.ambient, std::move(unique), field), std::move(checks)};
}

/// Parameters producing k[x^n, x^{n+1}, x^n y, y^n, y^{n+1}, x y^n, x y]:
/// u = (xy, x^n − y^n), f = x^n, multipliers (x^n, y^n) for both variables.
template <Field F>
BuilderParams<F> no_ulrich_builder_params(int n, const F& field = F{}) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  using P = Polynomial<F>;
  auto A = Ambient::xy();
  P x = P::variable(field, 2, 0), y = P::variable(field, 2, 1);
  const unsigned k = static_cast<unsigned>(n);
  BuilderParams<F> p{A, {x * y, x.pow(k) - y.pow(k)}, x.pow(k), {}, {}};
  p.multipliers = {{x.pow(k), y.pow(k)}, {x.pow(k), y.pow(k)}};
  p.extras = {x.pow(k + 1), x.pow(k) * y, y.pow(k + 1), x * y.pow(k)};
  return p;
}

}  // namespace ulrich
