#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrich {

// Coefficient fields. A field object carries whatever context its elements
// need (the modulus for F_p); elements themselves are plain values and all
// arithmetic goes through the field.

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, const mpz_class& z) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_integer(z) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
};

/// The rationals, with GMP arbitrary-precision numerators and denominators.
/// Values are kept canonical (lowest terms, positive denominator).
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(const mpz_class& z) const { return value_type(z); }
  value_type from_ratio(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("division by zero");
    value_type q(num, den);
    q.canonicalize();
    return q;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t p);

/// The prime field F_p for p < 2^31. Elements are representatives in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("modulus too large: " + std::to_string(p));
    if (!is_prime(p)) throw std::invalid_argument("non-prime modulus: " + std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }
  value_type from_ratio(const mpz_class& num, const mpz_class& den) const {
    return div(from_integer(num), from_integer(den));
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_negative(value_type) const { return false; }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    value_type result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

}  // namespace ulrich
