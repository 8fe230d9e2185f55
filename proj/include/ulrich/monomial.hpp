#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

/// Ambient rings have at most 4 user variables; the remaining slots hold tag
/// variables introduced by elimination (intersection, subalgebra membership).
inline constexpr int kMaxVars = 16;

/// Exponent vector of a monomial. Unused trailing slots are zero, so
/// comparisons never need the variable count.
struct ExponentVector {
  std::array<std::uint16_t, kMaxVars> e{};

  ExponentVector() = default;
  ExponentVector(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::out_of_range("too many exponents");
    int i = 0;
    for (int x : exps) {
      if (x < 0) throw std::invalid_argument("negative exponent");
      e[i++] = static_cast<std::uint16_t>(x);
    }
  }
  static ExponentVector unit(int var) {
    ExponentVector v;
    v.e[var] = 1;
    return v;
  }

  std::uint16_t operator[](int i) const { return e[i]; }
  std::uint16_t& operator[](int i) { return e[i]; }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  /// this | other
  bool divides(const ExponentVector& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }
  int support_mask() const {
    int m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= 1 << i;
    return m;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }
  /// a - b, requires b | a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison on the raw array; for containers only.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e <=> b.e; }
};

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}
inline bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

enum class OrderKind { grevlex, lex, elimination };

/// Monomial order. `elimination(k)` is the block order comparing variables
/// [0, k) by grevlex first and breaking ties by grevlex on the rest; the first
/// block is the one being eliminated.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int split = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(int split) { return {OrderKind::elimination, split}; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const {
    switch (kind) {
      case OrderKind::lex:
        for (int i = 0; i < kMaxVars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
        return std::strong_ordering::equal;
      case OrderKind::elimination: {
        auto c = grevlex_block(a, b, 0, split);
        if (c != 0) return c;
        return grevlex_block(a, b, split, kMaxVars);
      }
      case OrderKind::grevlex:
      default:
        return grevlex_block(a, b, 0, kMaxVars);
    }
  }
  bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind) {
      case OrderKind::lex: return "lex";
      case OrderKind::elimination: return "elim(" + std::to_string(split) + ")";
      default: return "grevlex";
    }
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  // Degree first; on ties the larger exponent in the last differing variable
  // is the smaller monomial.
  static std::strong_ordering grevlex_block(const ExponentVector& a, const ExponentVector& b, int lo,
                                            int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da <=> db;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return b.e[i] <=> a.e[i];
    return std::strong_ordering::equal;
  }
};

enum class Comparison { LT, EQ, GT };

/// Checked comparison of explicit exponent tuples.
inline Comparison compare_monomials(std::span<const int> u, std::span<const int> v, const MonomialOrder& ord) {
  if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
  if (u.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  ExponentVector a, b;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || v[i] < 0) throw std::invalid_argument("negative exponent");
    a.e[i] = static_cast<std::uint16_t>(u[i]);
    b.e[i] = static_cast<std::uint16_t>(v[i]);
  }
  auto c = ord.compare(a, b);
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

inline std::vector<int> to_vector(const ExponentVector& v, int nvars) {
  return std::vector<int>(v.e.begin(), v.e.begin() + nvars);
}

inline std::string exponent_string(const ExponentVector& v, int nvars) {
  std::string s = "(";
  for (int i = 0; i < nvars; ++i) {
    if (i) s += ",";
    s += std::to_string(v.e[i]);
  }
  return s + ")";
}

}  // namespace ulrich
