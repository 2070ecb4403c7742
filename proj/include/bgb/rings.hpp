#pragma once

/**
 * @file rings.hpp
 * @brief Coefficient rings used throughout the library.
 *
 * Every ring is a small context object: elements are plain values
 * (`value_type`) and all arithmetic goes through the context, so that the
 * modulus of Z/m is stored once and not in every coefficient.
 *
 *  - IntegerRing   Z, arbitrary precision (GMP)
 *  - RationalField Q, canonical fractions (GMP)
 *  - PrimeField    F_p for p < 2^64, machine words
 *  - ResidueRing   Z/m for arbitrary m (used for m = p^k)
 */

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "bgb/errors.hpp"

namespace bgb {

using Integer = mpz_class;
using Rational = mpq_class;

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, const Integer& z) {
  typename R::value_type;
  { R::is_field } -> std::convertible_to<bool>;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.eq(a, a) } -> std::convertible_to<bool>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.inv(a) } -> std::convertible_to<typename R::value_type>;
  { r.from_integer(z) } -> std::convertible_to<typename R::value_type>;
};

template <class R>
concept Field = CoefficientRing<R> && R::is_field;

class IntegerRing {
 public:
  using value_type = Integer;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  value_type inv(const value_type& a) const {
    if (!is_unit(a)) throw DomainError("integer " + a.get_str() + " is not a unit");
    return a;
  }
  value_type from_integer(const Integer& z) const { return z; }
  Integer to_integer(const value_type& a) const { return a; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool operator==(const IntegerRing&) const = default;
};

class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_unit(const value_type& a) const { return !is_zero(a); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw DomainError("division by zero in Q");
    return 1 / a;
  }
  value_type from_integer(const Integer& z) const { return Rational(z); }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool operator==(const RationalField&) const = default;
};

/// F_p with p < 2^64 stored in a machine word; products go through 128 bits.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) throw DomainError("prime field modulus must be at least 2");
  }

  std::uint64_t modulus() const { return p_; }
  Integer modulus_integer() const { return from_u64(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = a + b;
    if (s < a || s >= p_) s -= p_;
    return s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  bool is_unit(value_type a) const { return a != 0; }
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero in F_p");
    // Extended Euclid on signed 128-bit values; p < 2^64 keeps everything in range.
    __int128 r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      std::tie(r0, r1) = std::pair<__int128, __int128>{r1, r0 - q * r1};
      std::tie(t0, t1) = std::pair<__int128, __int128>{t1, t0 - q * t1};
    }
    if (r0 != 1) throw DomainError("element not invertible modulo " + std::to_string(p_));
    if (t0 < 0) t0 += p_;
    return static_cast<std::uint64_t>(t0);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type from_integer(const Integer& z) const {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_));
  }
  value_type from_int(std::int64_t v) const {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint64_t>(r);
  }
  Integer to_integer(value_type a) const { return from_u64(a); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  bool operator==(const PrimeField&) const = default;

  static Integer from_u64(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
  }

 private:
  std::uint64_t p_;
};

/// Z/m for an arbitrary modulus m > 1. Elements are canonical representatives
/// in [0, m).
class ResidueRing {
 public:
  using value_type = Integer;
  static constexpr bool is_field = false;

  explicit ResidueRing(Integer m) : m_(std::move(m)) {
    if (m_ <= 1) throw DomainError("residue ring modulus must exceed 1");
  }

  const Integer& modulus() const { return m_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const {
    Integer s = a + b;
    if (s >= m_) s -= m_;
    return s;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    Integer s = a - b;
    if (sgn(s) < 0) s += m_;
    return s;
  }
  value_type neg(const value_type& a) const { return is_zero(a) ? Integer(0) : Integer(m_ - a); }
  value_type mul(const value_type& a, const value_type& b) const { return reduce(a * b); }
  bool is_unit(const value_type& a) const {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m_.get_mpz_t());
    return g == 1;
  }
  value_type inv(const value_type& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m_.get_mpz_t()) == 0)
      throw DomainError(a.get_str() + " is not a unit modulo " + m_.get_str());
    return r;
  }
  value_type from_integer(const Integer& z) const { return reduce(z); }
  Integer to_integer(const value_type& a) const { return a; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool operator==(const ResidueRing& o) const { return m_ == o.m_; }

  value_type reduce(const Integer& z) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m_.get_mpz_t());
    return r;
  }

 private:
  Integer m_;
};

/// Natural logarithm of |z| for z != 0.
inline double log_abs(const Integer& z) {
  if (sgn(z) == 0) throw DomainError("logarithm of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

/// Height of a nonzero integer: log|u|.
inline double height(const Integer& u) {
  if (sgn(u) == 0) throw DomainError("height of zero is undefined");
  return log_abs(u);
}

/// Height of a nonzero rational: max(log|num|, log den).
inline double height(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("height of zero is undefined");
  double hn = log_abs(q.get_num());
  double hd = log_abs(q.get_den());
  return hn > hd ? hn : hd;
}

/// p^k as an Integer.
inline Integer power(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

}  // namespace bgb
