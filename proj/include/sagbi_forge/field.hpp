#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sagbi_forge/errors.hpp"

namespace sagbi_forge {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Element of the prime field F_p. The modulus travels with the value so
/// that arithmetic needs no ambient context.
class Zp {
 public:
  constexpr Zp() = default;
  constexpr Zp(std::uint32_t value, std::uint32_t prime) : v_(value % prime), p_(prime) {}

  static Zp from_int(long long n, std::uint32_t prime) {
    long long r = n % static_cast<long long>(prime);
    if (r < 0) r += prime;
    return Zp(static_cast<std::uint32_t>(r), prime);
  }

  [[nodiscard]] constexpr std::uint32_t value() const { return v_; }
  [[nodiscard]] constexpr std::uint32_t prime() const { return p_; }

  friend Zp operator+(Zp a, Zp b) {
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Zp operator-(Zp a, Zp b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
  }
  friend Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  [[nodiscard]] Zp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on (p, v)
    long long t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += p_;
    return raw(static_cast<std::uint32_t>(t), p_);
  }

 private:
  static constexpr Zp raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Per-field glue used by the generic algorithms: how to make constants,
/// test for zero, invert and print.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  struct Domain {
    [[nodiscard]] std::string name() const { return "q"; }
    friend bool operator==(const Domain&, const Domain&) = default;
  };
  static Rational from_int(long long n, const Domain&) { return Rational(static_cast<long>(n)); }
  static Rational from_rational(const Rational& q, const Domain&) { return q; }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational inverse(const Rational& c) { return Rational(1) / c; }
  static Domain domain_of(const Rational&) { return {}; }
  static std::string to_string(const Rational& c) { return c.get_str(); }
  /// True if the printed form carries a leading minus sign.
  static bool is_negative(const Rational& c) { return sgn(c) < 0; }
};

template <>
struct FieldTraits<Zp> {
  struct Domain {
    std::uint32_t prime = 32003;
    [[nodiscard]] std::string name() const { return "fp:" + std::to_string(prime); }
    friend bool operator==(const Domain&, const Domain&) = default;
  };
  static Zp from_int(long long n, const Domain& d) { return Zp::from_int(n, d.prime); }
  static Zp from_rational(const Rational& q, const Domain& d) {
    mpz_class num = q.get_num() % d.prime, den = q.get_den() % d.prime;
    if (num < 0) num += d.prime;
    Zp dn(static_cast<std::uint32_t>(den.get_ui()), d.prime);
    if (dn.value() == 0) throw ParseError("denominator vanishes in " + d.name());
    return Zp(static_cast<std::uint32_t>(num.get_ui()), d.prime) / dn;
  }
  static bool is_zero(const Zp& c) { return c.value() == 0; }
  static bool is_one(const Zp& c) { return c.value() == 1; }
  static Zp inverse(const Zp& c) { return c.inverse(); }
  static Domain domain_of(const Zp& c) { return {c.prime()}; }
  static std::string to_string(const Zp& c) { return std::to_string(c.value()); }
  static bool is_negative(const Zp&) { return false; }
};

template <class K>
using DomainOf = typename FieldTraits<K>::Domain;

/// Validates a prime-field domain; the modulus must fit the 32-bit
/// arithmetic above.
inline FieldTraits<Zp>::Domain prime_field(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) throw DomainError("not a usable prime: " + std::to_string(p));
  return {p};
}

}  // namespace sagbi_forge
