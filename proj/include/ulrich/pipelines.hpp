#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ulrich/closure.hpp"
#include "ulrich/report.hpp"
#include "ulrich/semigroup.hpp"
#include "ulrich/subring.hpp"

namespace ulrich {

template <Field F>
std::string field_name(const F& f) {
  return f.name();
}

/// k[x^n, x^{n+1}, x^n y, y^n, y^{n+1}, x y^n, x y] on monomial generators.
template <Field F>
PresentedSubring<F> no_ulrich_ring(int n, const F& field = F{}) {
  using P = Polynomial<F>;
  const unsigned k = static_cast<unsigned>(n);
  P x = P::variable(field, 2, 0), y = P::variable(field, 2, 1);
  return PresentedSubring<F>(Ambient::xy(),
                             {x.pow(k), x.pow(k + 1), x.pow(k) * y, y.pow(k), y.pow(k + 1), x * y.pow(k), x * y},
                             field);
}

namespace detail {

inline Json gap_certificate(const GapSet& g, int dim) {
  Json c;
  c["finite"] = g.finite;
  c["count"] = g.gaps.size();
  c["shell_top"] = g.shell_top;
  if (g.finite && g.gaps.size() <= 32) {
    Json list = Json::array();
    for (const auto& e : g.gaps) list.push_back(exponent_string(e, dim));
    c["gaps"] = std::move(list);
  }
  return c;
}

template <Field F>
Json minimal_reduction_certificate(const PresentedSubring<F>& R, const MinimalReductionReport<F>& rep) {
  Json c;
  c["colength"] = rep.colength;
  Json gens = Json::array();
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    Json g;
    g["generator"] = to_string(rep.generators[i], R.ambient());
    g["integrality"] = rep.certificates[i].describe();
    gens.push_back(std::move(g));
  }
  c["generators"] = std::move(gens);
  return c;
}

inline std::string overall(const Report& r, const std::string& success) {
  if (r.required_pass()) return success;
  if (r.any_inconclusive()) return "INCONCLUSIVE";
  return "PRECONDITION_FAILED";
}

}  // namespace detail

/// End-to-end check that R_n has no Ulrich modules: finite gap set, S2
/// multiplier witnesses, minimal reduction, f ∈ Ī − I, and IS ≠ m_R S.
template <Field F>
Report verify_no_ulrich_family(int n, const F& field = F{}) {
  using P = Polynomial<F>;
  Report rep;
  rep.pipeline = "verify-35";
  rep.field = field_name(field);
  rep.inputs["n"] = n;
  auto A = Ambient::xy();
  if (n < 1) {
    rep.add("n is a positive integer", "family-index", false, {{"n", n}});
    rep.verdict = "PRECONDITION_FAILED";
    return rep;
  }
  rep.inputs["ring"] = to_string(no_ulrich_semigroup(n));
  P x = P::variable(field, 2, 0), y = P::variable(field, 2, 1);
  const unsigned k = static_cast<unsigned>(n);
  std::vector<P> u{x * y, x.pow(k) - y.pow(k)};
  rep.inputs["reduction"] = to_string(u, A);

  // Ring builder: every hypothesis certified before the ring exists.
  try {
    auto built = build_ring(no_ulrich_builder_params<F>(n, field));
    Json c = Json::array();
    for (const auto& b : built.checks) c.push_back({{"clause", b.clause}, {"certificate", b.certificate}});
    auto model = monomial_model_of(built.ring);
    bool same = model && *model == no_ulrich_semigroup(n);
    rep.add("builder hypotheses hold", "builder-hypotheses", true, {{"clauses", c}});
    rep.add("builder output is the monomial ring R_n", "builder-output", same,
            {{"builder_ring", built.ring.to_string()}, {"monomial_model", model ? to_string(*model) : "none"}});
  } catch (const HypothesisError& e) {
    rep.add("builder hypotheses hold", "builder-hypotheses", false, {{"failed_clause", e.what()}});
    rep.verdict = "PRECONDITION_FAILED";
    return rep;
  }

  auto R = no_ulrich_ring<F>(n, field);
  auto G = no_ulrich_semigroup(n);
  auto gaps = find_gap_set(G);
  rep.add("gap set of R_n is finite", "finite-colength", gaps.finite, detail::gap_certificate(gaps, 2));
  if (!gaps.finite) {
    rep.verdict = "PRECONDITION_FAILED";
    return rep;
  }

  for (const auto& [name, v] : {std::pair<std::string, P>{"x", x}, std::pair<std::string, P>{"y", y}}) {
    auto w = s2_multiplier_witness(R, v);
    Json c;
    if (w.found) {
      c["u"] = to_string(*w.u, A);
      c["v"] = to_string(*w.v, A);
      c["colength"] = w.colength;
    }
    c["product_bound"] = w.product_bound;
    rep.add_verdict(name + " is multiplied into R by a height-two pair", "s2-multiplier",
                    w.found ? "PASS" : "INCONCLUSIVE", std::move(c));
  }

  auto mr = verify_minimal_reduction(R, u);
  bool any_inconclusive = false;
  for (const auto& c : mr.certificates) any_inconclusive = any_inconclusive || c.kind == ReductionKind::inconclusive;
  rep.add_verdict("(xy, x^n - y^n) is a minimal reduction of m_R", "minimal-reduction",
                  mr.confirmed ? "PASS" : (any_inconclusive ? "INCONCLUSIVE" : "FAIL"),
                  detail::minimal_reduction_certificate(R, mr));

  Ideal<F> I(field, 2, u);
  auto f = x.pow(k);
  auto integral = is_integral(f, I);
  auto nf = normal_form(f, I);
  rep.add_verdict("x^n is integral over I but not in I", "f-hypothesis",
                  integral.positive() && !nf.is_zero()
                      ? "PASS"
                      : (integral.kind == ReductionKind::inconclusive ? "INCONCLUSIVE" : "FAIL"),
                  {{"integrality", integral.describe()}, {"normal_form", to_string(nf, A)}});

  auto IS = extend_to_S(R, u);
  auto mS = maximal_ideal_extension(R);
  bool equal = ideals_equal(IS, mS);
  Json crit;
  crit["IS"] = to_string(IS.basis(), A);
  crit["mS"] = to_string(mS.basis(), A);
  crit["witness"] = to_string(f, A);
  crit["witness_normal_form"] = to_string(normal_form(f, IS), A);
  rep.add("IS differs from m_R S", "ulrich-criterion", !equal, std::move(crit));

  rep.verdict = detail::overall(rep, "NO_ULRICH");
  return rep;
}

/// Minimal reduction for the ring: the given one, or the first pair of
/// generators (or generator differences) certified by the integrality test.
template <Field F>
std::optional<std::pair<std::vector<Polynomial<F>>, MinimalReductionReport<F>>> find_minimal_reduction(
    const PresentedSubring<F>& R) {
  using P = Polynomial<F>;
  const auto& g = R.generators();
  std::vector<P> cands = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) cands.push_back(g[i] - g[j]);
  const int d = R.nvars();
  std::vector<P> pick;
  std::optional<std::pair<std::vector<P>, MinimalReductionReport<F>>> found;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (found) return;
    if (static_cast<int>(pick.size()) == d) {
      Ideal<F> I(R.field(), d, pick);
      if (!colength(I) || !is_primary_to_origin(I)) return;
      auto rep = verify_minimal_reduction(R, pick);
      if (rep.confirmed) found.emplace(pick, rep);
      return;
    }
    for (std::size_t i = from; i < cands.size() && !found; ++i) {
      if (cands[i].is_zero()) continue;
      pick.push_back(cands[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return found;
}

/// Computes IS = m_R S for a finite-colength monomial subring and reports the
/// equivalent conditions as deduced from it.
template <Field F>
Report verify_weak_lim_ulrich_equivalence(std::string_view ring_text, const F& field = F{}) {
  Report rep;
  rep.pipeline = "verify-51";
  rep.field = field_name(field);
  auto spec = parse_ring_spec(ring_text);
  PresentedSubring<F> R(spec.ambient, parse_generators<F>(spec.gens, spec.ambient, field), field);
  const auto& A = R.ambient();
  rep.inputs["ring"] = R.to_string();

  auto model = monomial_model_of(R);
  rep.add("R is a monomial subring", "monomial-class", model.has_value(),
          {{"model", model ? to_string(*model) : "none"}});
  if (!model) {
    rep.verdict = "REFUSED";
    return rep;
  }
  auto gaps = find_gap_set(*model);
  rep.add("S/R has finite length, so S is the S2-ification", "finite-colength", gaps.finite,
          detail::gap_certificate(gaps, model->dim()));
  if (!gaps.finite) {
    rep.checks.back().certificate["reason"] = "hypotheses not satisfied";
    rep.verdict = "REFUSED";
    return rep;
  }

  std::vector<Polynomial<F>> u;
  std::optional<MinimalReductionReport<F>> mr;
  for (const auto& [key, value] : spec.extra)
    if (key == "reduction") u = parse_generators<F>(value, A, field);
  if (!u.empty()) {
    mr = verify_minimal_reduction(R, u);
    if (!mr->confirmed) mr.reset();
  } else if (auto found = find_minimal_reduction(R)) {
    u = found->first;
    mr = found->second;
  }
  if (!mr) {
    rep.add("a minimal reduction of m_R is certified", "minimal-reduction", false);
    rep.verdict = "REFUSED";
    return rep;
  }
  rep.inputs["reduction"] = to_string(u, A);
  rep.add("a minimal reduction of m_R is certified", "minimal-reduction", true,
          detail::minimal_reduction_certificate(R, *mr));

  auto IS = extend_to_S(R, u);
  auto mS = maximal_ideal_extension(R);
  const std::size_t eR = *colength(IS);
  const std::size_t nuS = *colength(mS);
  bool d_holds = ideals_equal(IS, mS);
  Json mult{{"e(R)", eR}, {"nu_R(S)", nuS}};
  bool agrees = true;
  if (model->dim() == 2) {
    auto e = multiplicity(*model);
    mult["semigroup_multiplicity"] = e.value;
    agrees = e.stabilized && static_cast<std::size_t>(e.value) == eR;
  }
  rep.add("e(R) = colength(IS) agrees with the Hilbert-Samuel count", "multiplicity-data", agrees, std::move(mult));

  Json dcert{{"IS", to_string(IS.basis(), A)}, {"mS", to_string(mS.basis(), A)}};
  if (!d_holds) {
    for (const auto& g : R.generators()) {
      auto nf = normal_form(g, IS);
      if (!nf.is_zero()) {
        dcert["witness"] = to_string(g, A);
        dcert["witness_normal_form"] = to_string(nf, A);
        break;
      }
    }
  }
  rep.add_verdict("(d) IS = m_R S", "condition-d", d_holds ? "TRUE" : "FALSE", std::move(dcert), false);
  const std::string deduced = d_holds ? "DEDUCED_TRUE" : "DEDUCED_FALSE";
  const Json via{{"deduced_from", "condition-d"}, {"note", "deduced via the equivalence theorem, not computed"}};
  rep.add_verdict("(a) a weakly lim Ulrich sequence exists", "condition-a", deduced, via, false);
  rep.add_verdict("(b) an Ulrich module exists", "condition-b", deduced, via, false);
  rep.add_verdict("(c) S is an Ulrich R-module", "condition-c", deduced, via, false);

  rep.verdict = rep.required_pass() ? (d_holds ? "ALL_TRUE" : "ALL_FALSE") : detail::overall(rep, "");
  return rep;
}

/// Multiplicity of the three-dimensional semigroup ring T_n and its
/// localization at the face where s is inverted.
template <Field F>
Report verify_localized_family(int n, const F& field = F{}) {
  Report rep;
  rep.pipeline = "verify-37";
  rep.field = field_name(field);
  rep.inputs["n"] = n;
  if (n < 1) {
    rep.add("n is a positive integer", "family-index", false, {{"n", n}});
    rep.verdict = "PRECONDITION_FAILED";
    return rep;
  }
  auto T = veronese_face_semigroup(n);
  rep.inputs["ring"] = to_string(T);
  auto e = multiplicity(T);
  const long expected = static_cast<long>(n + 1) * (n + 1);
  Json ec{{"value", e.value},
          {"expected", expected},
          {"difference_order", e.difference_order},
          {"window_start", e.window_start},
          {"stabilized", e.stabilized}};
  rep.add_verdict("e(T_n) = (n+1)^2", "face-multiplicity",
                  !e.stabilized ? "INCONCLUSIVE" : (e.value == expected ? "PASS" : "FAIL"), std::move(ec));

  auto loc = localize_at_face(T);
  Json units = Json::array();
  for (const auto& u : loc.units) units.push_back(exponent_string(u, 3));
  bool same = loc.image == no_ulrich_semigroup(n);
  rep.add("localized generators equal those of R_n", "face-localization", same,
          {{"image", to_string(loc.image)}, {"units", units}, {"R_n", to_string(no_ulrich_semigroup(n))}});

  if (n >= 2) {
    auto sub = verify_no_ulrich_family<F>(n, field);
    rep.add("the localized ring has no Ulrich modules", "localized-no-ulrich", sub.verdict == "NO_ULRICH",
            {{"attached_verdict", sub.verdict}});
    rep.attached.push_back(std::move(sub));
    auto Rn = no_ulrich_ring<F>(n, field);
    auto g = to_string(Rn.generators(), Rn.ambient());
    const std::string k = std::to_string(n);
    auto eq = verify_weak_lim_ulrich_equivalence<F>(
        "ring ambient=(x,y) gens=[" + g.substr(1, g.size() - 2) + "] reduction=[x*y, x^" + k + " - y^" + k + "]", field);
    rep.add("the localized ring has no weakly lim Ulrich sequence", "localized-no-weakly-lim-ulrich",
            eq.verdict == "ALL_FALSE", {{"attached_verdict", eq.verdict}});
    rep.attached.push_back(std::move(eq));
    rep.verdict = detail::overall(rep, "LOCALIZES_TO_NO_ULRICH");
  } else {
    rep.add_verdict("the localized ring has no Ulrich modules", "localized-no-ulrich", "UNAVAILABLE",
                    {{"reason", "n below the family range"}}, false);
    rep.verdict = rep.required_pass() ? "NO_ULRICH_UNAVAILABLE" : detail::overall(rep, "");
  }
  return rep;
}

}  // namespace ulrich
