#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ulrich/field.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

template <Field F>
struct Term {
  ExponentVector exp;
  typename F::value_type coef;
};

/// Sparse polynomial over F in `nvars` variables. Terms are stored in
/// descending grevlex order with nonzero coefficients, so two polynomials are
/// equal iff their term vectors are.
template <Field F>
class Polynomial {
 public:
  using Scalar = typename F::value_type;
  using TermType = Term<F>;

  Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  }

  static Polynomial constant(F field, int nvars, Scalar c) {
    Polynomial p(std::move(field), nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({ExponentVector{}, std::move(c)});
    return p;
  }
  static Polynomial one(F field, int nvars) {
    auto c = field.one();
    return constant(std::move(field), nvars, std::move(c));
  }
  static Polynomial monomial(F field, int nvars, const ExponentVector& e, Scalar c) {
    Polynomial p(std::move(field), nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({e, std::move(c)});
    return p;
  }
  static Polynomial monomial(F field, int nvars, const ExponentVector& e) {
    auto c = field.one();
    return monomial(std::move(field), nvars, e, std::move(c));
  }
  static Polynomial variable(F field, int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
    return monomial(std::move(field), nvars, ExponentVector::unit(index));
  }
  /// Canonicalizes: sorts, combines like terms, drops zeros.
  static Polynomial from_terms(F field, int nvars, std::vector<TermType> terms) {
    Polynomial p(std::move(field), nvars);
    const auto ord = MonomialOrder::grevlex();
    std::sort(terms.begin(), terms.end(),
              [&](const TermType& a, const TermType& b) { return ord.greater(a.exp, b.exp); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coef = p.field_.add(p.terms_.back().coef, t.coef);
      } else {
        if (!p.terms_.empty() && p.field_.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.field_.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  std::span<const TermType> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp.degree());
    return d;
  }
  /// Lowest total degree of a term (order at the origin); -1 for zero.
  int order_at_origin() const {
    int d = -1;
    for (const auto& t : terms_) d = d < 0 ? t.exp.degree() : std::min(d, t.exp.degree());
    return d;
  }
  Scalar constant_term() const {
    if (!terms_.empty() && terms_.back().exp.is_one()) return terms_.back().coef;
    return field_.zero();
  }
  /// Coefficient of a given monomial (zero if absent).
  Scalar coefficient(const ExponentVector& e) const {
    for (const auto& t : terms_)
      if (t.exp == e) return t.coef;
    return field_.zero();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
    std::vector<TermType> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, a.field_.mul(s.coef, t.coef)});
    return from_terms(a.field_, a.nvars_, std::move(prod));
  }

  Polynomial scaled(const Scalar& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = field_.mul(t.coef, c);
    return r;
  }
  /// Multiply by a monomial x^e.
  Polynomial shifted(const ExponentVector& e) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.exp = t.exp + e;
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = one(field_, nvars_);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp) return false;
      if (!a.field_.is_zero(a.field_.sub(a.terms_[i].coef, b.terms_[i].coef))) return false;
    }
    return true;
  }

  /// Reinterpret in a ring with more (or fewer) variables by moving variable i
  /// to position map[i]. Dropped variables must not occur.
  Polynomial remap(int new_nvars, std::span<const int> map) const {
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      ExponentVector e;
      for (int i = 0; i < nvars_; ++i) {
        if (!t.exp[i]) continue;
        if (map[i] < 0) throw std::invalid_argument("remap drops an occurring variable");
        e[map[i]] = t.exp[i];
      }
      out.push_back({e, t.coef});
    }
    return from_terms(field_, new_nvars, std::move(out));
  }

  /// Substitute polynomials (all in a common target ring) for the variables.
  template <class Target>
  Target substitute(std::span<const Target> images) const {
    if (images.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("substitution arity");
    if (images.empty()) return Target::constant(field_, 0, constant_term());
    const F& tf = images[0].field();
    const int tn = images[0].nvars();
    Target acc(tf, tn);
    for (const auto& t : terms_) {
      Target m = Target::constant(tf, tn, t.coef);
      for (int i = 0; i < nvars_; ++i)
        if (t.exp[i]) m = m * images[i].pow(t.exp[i]);
      acc += m;
    }
    return acc;
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_)) throw std::invalid_argument("ambient mismatch");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    const auto ord = MonomialOrder::grevlex();
    Polynomial r(a.field_, a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const F& f = a.field_;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && ord.greater(a.terms_[i].exp, b.terms_[j].exp))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || ord.greater(b.terms_[j].exp, a.terms_[i].exp)) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.exp, subtract ? f.neg(t.coef) : t.coef});
      } else {
        auto c = subtract ? f.sub(a.terms_[i].coef, b.terms_[j].coef) : f.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!f.is_zero(c)) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  int nvars_;
  std::vector<TermType> terms_;
};

}  // namespace ulrich
