#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bgb/poly.hpp"

namespace bgb {

/// GF(p^e) = F_p[z]/(m(z)) with m monic irreducible of degree e. Elements are
/// coefficient vectors of length exactly e.
class ExtensionField {
 public:
  using value_type = std::vector<std::uint64_t>;
  static constexpr bool is_field = true;

  ExtensionField(PrimeField base, UniPoly<PrimeField> modulus)
      : fp_(base), kz_(base), modulus_(std::move(modulus)) {
    if (kz_.degree(modulus_) < 1 || modulus_.c.back() != 1)
      throw DomainError("extension modulus must be monic of positive degree");
    e_ = static_cast<std::size_t>(kz_.degree(modulus_));
  }

  /// Picks a random monic irreducible polynomial of degree e over F_p.
  template <class Rng>
  static ExtensionField random(PrimeField base, std::size_t e, Rng& rng) {
    UniPolyRing<PrimeField> kz(base);
    std::uniform_int_distribution<std::uint64_t> coin(0, base.modulus() - 1);
    for (;;) {
      std::vector<std::uint64_t> c(e + 1);
      for (std::size_t i = 0; i < e; ++i) c[i] = coin(rng);
      c[e] = 1;
      auto m = kz.make(c);
      if (is_irreducible(kz, m)) return ExtensionField(base, m);
    }
  }

  /// Ben-Or test: gcd(x^(p^i) - x, m) = 1 for i <= deg(m)/2.
  static bool is_irreducible(const UniPolyRing<PrimeField>& kz, const UniPoly<PrimeField>& m) {
    int n = kz.degree(m);
    if (n <= 0) return false;
    if (n == 1) return true;
    auto x = kz.x();
    auto power = x;
    for (int i = 1; i <= n / 2; ++i) {
      power = powmod(kz, power, kz.base().modulus(), m);
      auto [g, s, t] = kz.xgcd(kz.sub(power, x), m);
      if (kz.degree(g) > 0) return false;
    }
    return true;
  }

  std::size_t degree() const { return e_; }
  const PrimeField& base() const { return fp_; }

  value_type zero() const { return value_type(e_, 0); }
  value_type one() const {
    value_type v(e_, 0);
    v[0] = 1;
    return v;
  }
  value_type embed(std::uint64_t a) const {
    value_type v(e_, 0);
    v[0] = a;
    return v;
  }
  bool is_zero(const value_type& a) const {
    for (auto v : a)
      if (v) return false;
    return true;
  }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const {
    value_type r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = fp_.add(a[i], b[i]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = fp_.sub(a[i], b[i]);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = fp_.neg(a[i]);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return from_poly(kz_.rem(kz_.mul(to_poly(a), to_poly(b)), modulus_));
  }
  bool is_unit(const value_type& a) const { return !is_zero(a); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw DomainError("division by zero in GF(p^e)");
    auto [g, s, t] = kz_.xgcd(to_poly(a), modulus_);
    return from_poly(kz_.rem(s, modulus_));
  }
  value_type from_integer(const Integer& z) const { return embed(fp_.from_integer(z)); }

  template <class Rng>
  value_type random_element(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> coin(0, fp_.modulus() - 1);
    value_type v(e_);
    for (auto& c : v) c = coin(rng);
    return v;
  }

 private:
  static UniPoly<PrimeField> powmod(const UniPolyRing<PrimeField>& kz, UniPoly<PrimeField> b, std::uint64_t e,
                                    const UniPoly<PrimeField>& m) {
    UniPoly<PrimeField> r = kz.one();
    b = kz.rem(b, m);
    while (e) {
      if (e & 1) r = kz.rem(kz.mul(r, b), m);
      e >>= 1;
      if (e) b = kz.rem(kz.mul(b, b), m);
    }
    return r;
  }
  UniPoly<PrimeField> to_poly(const value_type& a) const { return kz_.make(a); }
  value_type from_poly(const UniPoly<PrimeField>& f) const {
    value_type v(e_, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) v[i] = f.c[i];
    return v;
  }

  PrimeField fp_;
  UniPolyRing<PrimeField> kz_;
  UniPoly<PrimeField> modulus_;
  std::size_t e_ = 1;
};

}  // namespace bgb
