#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulrich/polynomial.hpp"

namespace ulrich {

/// Variable names of an ambient polynomial ring.
struct Ambient {
  std::vector<std::string> names;

  Ambient() = default;
  explicit Ambient(std::vector<std::string> n) : names(std::move(n)) {
    if (names.empty() || names.size() > 4) throw std::invalid_argument("ambient must have 1 to 4 variables");
  }
  int size() const { return static_cast<int>(names.size()); }
  int index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }
  friend bool operator==(const Ambient&, const Ambient&) = default;

  static Ambient xy() { return Ambient({"x", "y"}); }
  static Ambient sxy() { return Ambient({"s", "x", "y"}); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

// Recursive-descent parser:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' integer))*
//   factor := '-' factor | power
//   power  := atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
// Whitespace is ignored; juxtaposition is a syntax error.
template <Field F>
class PolyParser {
 public:
  using Poly = Polynomial<F>;

  PolyParser(std::string_view text, const Ambient& ambient, const F& field)
      : text_(text), ambient_(ambient), field_(field) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  /// Comma-separated generator list, optionally wrapped in one pair of
  /// parentheses or brackets, optionally followed by '^k'.
  std::vector<Poly> parse_list_all() {
    skip_ws();
    std::vector<Poly> gens;
    char open = peek();
    if ((open == '(' || open == '[') && wraps_whole(open)) {
      char close = open == '(' ? ')' : ']';
      ++pos_;
      skip_ws();
      if (peek() != close) {
        gens.push_back(expr());
        skip_ws();
        while (peek() == ',') {
          ++pos_;
          gens.push_back(expr());
          skip_ws();
        }
      }
      expect(close);
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        int k = small_integer();
        gens = power_of_list(gens, k);
      }
    } else if (pos_ < text_.size()) {
      gens.push_back(expr());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        gens.push_back(expr());
        skip_ws();
      }
    }
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return gens;
  }

 private:
  std::vector<Poly> power_of_list(const std::vector<Poly>& gens, int k) {
    std::vector<Poly> cur{Poly::one(field_, ambient_.size())};
    for (int i = 0; i < k; ++i) {
      std::vector<Poly> next;
      for (const auto& a : cur)
        for (const auto& g : gens) {
          auto p = a * g;
          bool dup = false;
          for (const auto& q : next) dup = dup || q == p;
          if (!dup) next.push_back(std::move(p));
        }
      cur = std::move(next);
    }
    return cur;
  }

  bool wraps_whole(char open) const {
    char close = open == '(' ? ')' : ']';
    int depth = 0;
    std::size_t i = pos_;
    for (; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        --depth;
        if (depth == 0) break;
      }
    }
    if (i >= text_.size() || text_[i] != close) return false;
    // The group may be followed only by whitespace or a power suffix.
    std::size_t j = i + 1;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    if (j == text_.size()) return true;
    if (text_[j] != '^') return false;
    ++j;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    return j == text_.size();
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("divisor must be an integer literal");
        mpz_class d = integer_literal();
        if (d == 0) fail("division by zero");
        auto inv = field_.from_ratio(mpz_class(1), d);
        acc = acc.scaled(inv);
      } else {
        break;
      }
    }
    skip_ws();
    char n = peek();
    if (std::isalnum(static_cast<unsigned char>(n)) || n == '_' || n == '(')
      fail("implicit multiplication is not allowed");
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      int k = small_integer();
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    const int nv = ambient_.size();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(field_, nv, field_.from_integer(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ambient_.index_of(name);
      if (idx < 0) fail_at(start, "unknown variable '" + name + "'");
      return Poly::variable(field_, nv, idx);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
    std::size_t start = pos_;
    mpz_class v = integer_literal();
    if (v > 10000) fail_at(start, "exponent too large");
    return static_cast<int>(v.get_si());
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  const Ambient& ambient_;
  const F& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, const Ambient& ambient, const F& field = F{}) {
  return detail::PolyParser<F>(text, ambient, field).parse_all();
}

/// Parses "(g1, g2, ...)" (also "[...]", a bare list, or "(...)^k").
template <Field F>
std::vector<Polynomial<F>> parse_generators(std::string_view text, const Ambient& ambient, const F& field = F{}) {
  return detail::PolyParser<F>(text, ambient, field).parse_list_all();
}

template <Field F>
std::string to_string(const Polynomial<F>& p, const Ambient& ambient) {
  if (p.nvars() != ambient.size()) throw std::invalid_argument("ambient mismatch");
  if (p.is_zero()) return "0";
  const F& f = p.field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = f.is_negative(t.coef);
    auto mag = neg ? f.neg(t.coef) : t.coef;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      int e = t.exp[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ambient.names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += f.to_string(mag);
    } else if (f.is_one(mag)) {
      out += mono;
    } else {
      out += f.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

template <Field F>
std::string to_string(const std::vector<Polynomial<F>>& ps, const Ambient& ambient) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ps[i], ambient);
  }
  return s + ")";
}

/// Parses a field description: "q" or "fp:P".
template <Field F>
F parse_field(std::string_view text);

template <>
inline RationalField parse_field<RationalField>(std::string_view text) {
  if (text != "q" && text != "Q" && text != "QQ") throw std::invalid_argument("not the rational field: " + std::string(text));
  return RationalField{};
}

template <>
inline PrimeField parse_field<PrimeField>(std::string_view text) {
  if (text.substr(0, 3) != "fp:") throw std::invalid_argument("expected fp:P, got " + std::string(text));
  std::string digits(text.substr(3));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad modulus: " + digits);
  return PrimeField(std::stoull(digits));
}

}  // namespace ulrich
