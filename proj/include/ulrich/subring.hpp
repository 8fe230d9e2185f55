#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/groebner.hpp"
#include "ulrich/parse.hpp"
#include "ulrich/semigroup.hpp"

namespace ulrich {

/// Minimal generators of the semigroup spanned by `gens` (each one not a sum
/// of the others).
inline std::vector<ExponentVector> minimal_semigroup_generators(int dim, std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<ExponentVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (others.empty() || !sg_member(AffineSemigroup(dim, others), gens[i]).member) out.push_back(gens[i]);
  }
  return out;
}

/// k[g_1, ..., g_m] ⊆ S = k[x_1..x_d].
template <Field F>
class PresentedSubring {
 public:
  using Poly = Polynomial<F>;

  PresentedSubring(Ambient ambient, std::vector<Poly> gens, F field = F{})
      : ambient_(std::move(ambient)), field_(std::move(field)), gens_(std::move(gens)),
        state_(std::make_shared<State>()) {
    if (gens_.empty()) throw std::invalid_argument("subring needs at least one generator");
    if (ambient_.size() + static_cast<int>(gens_.size()) > kMaxVars)
      throw std::invalid_argument("too many generators for tag elimination");
    for (const auto& g : gens_) {
      if (g.nvars() != ambient_.size() || !(g.field() == field_)) throw std::invalid_argument("ambient mismatch");
      if (g.is_zero() || !field_.is_zero(g.constant_term()))
        throw std::invalid_argument("subring generators must lie in the maximal ideal at the origin");
    }
    bool monomial = true;
    for (const auto& g : gens_) monomial = monomial && g.is_monomial() && field_.is_one(g.terms()[0].coef);
    if (monomial) {
      std::vector<ExponentVector> e;
      for (const auto& g : gens_) e.push_back(g.terms()[0].exp);
      model_ = AffineSemigroup(ambient_.size(), std::move(e));
    }
  }

  const Ambient& ambient() const { return ambient_; }
  const F& field() const { return field_; }
  int nvars() const { return ambient_.size(); }
  const std::vector<Poly>& generators() const { return gens_; }
  /// Present when every generator is a monic monomial.
  const std::optional<AffineSemigroup>& monomial_model() const { return model_; }

  /// (t_i − g_i) in k[x, t], eliminating the x block first.
  const Ideal<F>& membership_ideal() const {
    std::call_once(state_->once, [this] {
      const int n = nvars(), m = static_cast<int>(gens_.size());
      std::vector<int> map(n);
      for (int i = 0; i < n; ++i) map[i] = i;
      std::vector<Poly> rel;
      for (int i = 0; i < m; ++i)
        rel.push_back(Poly::variable(field_, n + m, n + i) - gens_[i].remap(n + m, map));
      state_->ideal.emplace(field_, n + m, std::move(rel), MonomialOrder::elimination(n));
    });
    return *state_->ideal;
  }

  std::string to_string() const {
    std::string s = "ring ambient=(";
    for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + ambient_.names[i];
    s += ") gens=[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + ulrich::to_string(gens_[i], ambient_);
    return s + "]";
  }

 private:
  struct State {
    std::once_flag once;
    std::optional<Ideal<F>> ideal;
  };

  Ambient ambient_;
  F field_;
  std::vector<Poly> gens_;
  std::optional<AffineSemigroup> model_;
  std::shared_ptr<State> state_;
};

/// Parses `ring ambient=(x,y) gens=[...]`; further `key=value` fields are
/// returned in `extra` (keyed by name, value text unparsed).
struct RingSpec {
  Ambient ambient;
  std::string gens;
  std::vector<std::pair<std::string, std::string>> extra;
};

inline RingSpec parse_ring_spec(std::string_view text) {
  RingSpec spec;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos, 4) != "ring") throw std::invalid_argument("ring spec must start with 'ring'");
  pos += 4;
  bool have_ambient = false, have_gens = false;
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    std::size_t eq = text.find('=', pos);
    if (eq == std::string_view::npos) throw std::invalid_argument("ring spec: expected key=value");
    std::string key(text.substr(pos, eq - pos));
    pos = eq + 1;
    skip();
    if (pos >= text.size()) throw std::invalid_argument("ring spec: missing value for " + key);
    char open = text[pos];
    char close = open == '(' ? ')' : open == '[' ? ']' : '\0';
    if (!close) throw std::invalid_argument("ring spec: value of " + key + " must be bracketed");
    int depth = 0;
    std::size_t end = pos;
    for (; end < text.size(); ++end) {
      if (text[end] == '(' || text[end] == '[') ++depth;
      if (text[end] == ')' || text[end] == ']') {
        if (--depth == 0) break;
      }
    }
    if (end >= text.size()) throw std::invalid_argument("ring spec: unbalanced brackets in " + key);
    std::string value(text.substr(pos, end - pos + 1));
    pos = end + 1;
    if (key == "ambient") {
      std::vector<std::string> names;
      std::string cur;
      for (char c : value.substr(1, value.size() - 2)) {
        if (c == ',') {
          names.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur += c;
        }
      }
      names.push_back(cur);
      spec.ambient = Ambient(names);
      have_ambient = true;
    } else if (key == "gens") {
      spec.gens = value;
      have_gens = true;
    } else {
      spec.extra.emplace_back(key, value);
    }
  }
  if (!have_ambient || !have_gens) throw std::invalid_argument("ring spec needs ambient=(...) and gens=[...]");
  return spec;
}

template <Field F>
PresentedSubring<F> parse_ring(std::string_view text, const F& field = F{}) {
  auto spec = parse_ring_spec(text);
  return PresentedSubring<F>(spec.ambient, parse_generators<F>(spec.gens, spec.ambient, field), field);
}

template <Field F>
struct SubalgebraMembership {
  bool member = false;
  /// When member: z as a polynomial in the generators (variable i ↦ g_i).
  std::optional<Polynomial<F>> representation;
  /// When not a member: the normal form in k[x, t].
  std::optional<Polynomial<F>> normal_form;
};

template <Field F>
SubalgebraMembership<F> subalgebra_member(const PresentedSubring<F>& R, const Polynomial<F>& z) {
  if (z.nvars() != R.nvars() || !(z.field() == R.field())) throw std::invalid_argument("ambient mismatch");
  const int n = R.nvars(), m = static_cast<int>(R.generators().size());
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  auto nf = normal_form(z.remap(n + m, map), R.membership_ideal());
  bool tags_only = true;
  for (const auto& t : nf.terms())
    for (int i = 0; i < n; ++i) tags_only = tags_only && t.exp[i] == 0;
  SubalgebraMembership<F> out;
  // Constants lie in k ⊆ R.
  out.member = tags_only;
  if (tags_only) {
    std::vector<int> down(n + m, -1);
    for (int i = 0; i < m; ++i) down[n + i] = i;
    out.representation = nf.remap(m, down);
  } else {
    out.normal_form = nf;
  }
  return out;
}

/// Writes a representation in terms of the generators, e.g. "(x*y)*(y^2)".
template <Field F>
std::string representation_string(const PresentedSubring<F>& R, const Polynomial<F>& rep) {
  if (rep.is_zero()) return "0";
  const F& f = R.field();
  std::string out;
  bool first = true;
  for (const auto& t : rep.terms()) {
    bool neg = f.is_negative(t.coef);
    auto mag = neg ? f.neg(t.coef) : t.coef;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < rep.nvars(); ++i) {
      if (!t.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "(" + to_string(R.generators()[i], R.ambient()) + ")";
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty()) out += f.to_string(mag);
    else if (f.is_one(mag)) out += mono;
    else out += f.to_string(mag) + "*" + mono;
  }
  return out;
}

/// The S-ideal generated by elements of R.
template <Field F>
Ideal<F> extend_to_S(const PresentedSubring<F>& R, const std::vector<Polynomial<F>>& elements) {
  for (const auto& e : elements)
    if (!subalgebra_member(R, e).member)
      throw std::invalid_argument("extend_to_S: " + to_string(e, R.ambient()) + " is not in R");
  return Ideal<F>(R.field(), R.nvars(), elements);
}

/// m_R·S
template <Field F>
Ideal<F> maximal_ideal_extension(const PresentedSubring<F>& R) {
  return Ideal<F>(R.field(), R.nvars(), R.generators());
}

/// When every monomial occurring in a generator lies in R, R is the monomial
/// algebra on those monomials; returns its minimal semigroup generators.
template <Field F>
std::optional<AffineSemigroup> monomial_model_of(const PresentedSubring<F>& R) {
  if (R.monomial_model()) {
    return AffineSemigroup(R.nvars(), minimal_semigroup_generators(R.nvars(), R.monomial_model()->generators()));
  }
  std::vector<ExponentVector> monos;
  for (const auto& g : R.generators())
    for (const auto& t : g.terms()) {
      auto m = Polynomial<F>::monomial(R.field(), R.nvars(), t.exp);
      if (!subalgebra_member(R, m).member) return std::nullopt;
      monos.push_back(t.exp);
    }
  return AffineSemigroup(R.nvars(), minimal_semigroup_generators(R.nvars(), std::move(monos)));
}

template <Field F>
struct MultiplierWitness {
  bool found = false;
  std::optional<Polynomial<F>> u, v;
  std::size_t colength = 0;
  /// Largest number of generator factors used by the candidates searched.
  int product_bound = 3;
};

/// Searches products of at most three generators for u, v with u·f, v·f ∈ R
/// and (u, v)S of finite colength.
template <Field F>
MultiplierWitness<F> s2_multiplier_witness(const PresentedSubring<F>& R, const Polynomial<F>& f) {
  if (subalgebra_member(R, f).member) throw std::invalid_argument("s2_multiplier_witness: f already lies in R");
  using P = Polynomial<F>;
  const auto& g = R.generators();
  std::vector<P> candidates;
  auto add = [&](P p) {
    for (const auto& c : candidates)
      if (c == p) return;
    candidates.push_back(std::move(p));
  };
  for (const auto& a : g) add(a);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) add(g[i] * g[j]);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      for (std::size_t k = j; k < g.size(); ++k) add(g[i] * g[j] * g[k]);

  std::vector<P> good;
  MultiplierWitness<F> out;
  for (const auto& c : candidates) {
    if (!subalgebra_member(R, c * f).member) continue;
    for (const auto& prev : good) {
      auto col = colength(Ideal<F>(R.field(), R.nvars(), {prev, c}));
      if (col) {
        out.found = true;
        out.u = prev;
        out.v = c;
        out.colength = *col;
        return out;
      }
    }
    good.push_back(c);
  }
  return out;
}

}  // namespace ulrich
