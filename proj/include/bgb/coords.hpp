#pragma once

/**
 * @file coords.hpp
 * @brief Linear changes of coordinates f^g = f(g11 x + g21 y, g12 x + g22 y).
 *
 * With this convention (f^g)^h = f^(h g), so applying the inverse matrix
 * undoes a change of coordinates.
 */

#include <array>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/oracle.hpp"
#include "bgb/poly.hpp"
#include "bgb/primes.hpp"

namespace bgb {

/// 2x2 matrix [g11, g12; g21, g22] with entries in a ring.
template <CoefficientRing R>
struct Gamma {
  using E = typename R::value_type;
  E g11, g12, g21, g22;
  bool operator==(const Gamma&) const = default;
};

/// Integer coordinate change as sampled by the driver.
struct Coords2x2 {
  Integer g11 = 1, g12 = 0, g21 = 0, g22 = 1;

  Integer det() const { return g11 * g22 - g12 * g21; }
  static Coords2x2 identity() { return {}; }
  bool operator==(const Coords2x2&) const = default;

  template <CoefficientRing R>
  Gamma<R> in(const R& ring) const {
    return {ring.from_integer(g11), ring.from_integer(g12), ring.from_integer(g21), ring.from_integer(g22)};
  }
};

template <Field F>
Gamma<F> inverse(const F& field, const Gamma<F>& g) {
  const auto det = field.sub(field.mul(g.g11, g.g22), field.mul(g.g12, g.g21));
  if (field.is_zero(det)) throw DomainError("coordinate change is singular");
  const auto inv = field.inv(det);
  return {field.mul(g.g22, inv), field.neg(field.mul(g.g12, inv)), field.neg(field.mul(g.g21, inv)),
          field.mul(g.g11, inv)};
}

template <CoefficientRing R>
BiPoly<R> apply_coords(const BiPolyRing<R>& ring, const BiPoly<R>& f, const Gamma<R>& g) {
  if (f.is_zero()) return f;
  const auto& k = ring.base();
  const auto X = ring.add(ring.monomial(g.g11, 1, 0), ring.monomial(g.g21, 0, 1));
  const auto Y = ring.add(ring.monomial(g.g12, 1, 0), ring.monomial(g.g22, 0, 1));
  const int d = ring.total_degree(f);
  std::vector<BiPoly<R>> xp{ring.one()}, yp{ring.one()};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(ring.mul(xp.back(), X));
    yp.push_back(ring.mul(yp.back(), Y));
  }
  BiPoly<R> out;
  for (std::size_t j = 0; j < f.rows.size(); ++j)
    for (std::size_t i = 0; i < f.rows[j].c.size(); ++i) {
      const auto& a = f.rows[j].c[i];
      if (k.is_zero(a)) continue;
      out = ring.add(out, ring.scale(a, ring.mul(xp[i], yp[j])));
    }
  return out;
}

template <CoefficientRing R>
std::vector<BiPoly<R>> apply_coords(const BiPolyRing<R>& ring, const std::vector<BiPoly<R>>& F, const Gamma<R>& g) {
  std::vector<BiPoly<R>> out;
  out.reserve(F.size());
  for (const auto& f : F) out.push_back(apply_coords(ring, f, g));
  return out;
}

inline BiPoly<IntegerRing> apply_coords(const BiPoly<IntegerRing>& f, const Coords2x2& g) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  return apply_coords(zxy, f, g.in(IntegerRing{}));
}

/// Upper end 2^(P+2) (d^4 + d) of the sampling range.
inline Integer gamma_range(int P, int d) {
  if (P < 1 || d < 1) throw DomainError("sample_gamma needs P >= 1 and d >= 1");
  const Integer a1 = Integer(d) * d * d * d + d;
  return a1 << static_cast<mp_bitcnt_t>(P + 2);
}

/// Four entries uniform in {0, ..., 2^(P+2)(d^4+d)}; singular draws are
/// redrawn up to 64 times.
template <class Rng>
Coords2x2 sample_gamma(int P, int d, Rng& rng) {
  const Integer hi = gamma_range(P, d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Coords2x2 g{uniform_integer(rng, hi), uniform_integer(rng, hi), uniform_integer(rng, hi),
                uniform_integer(rng, hi)};
    if (g.det() != 0) return g;
  }
  throw RetriesExhausted("sample_gamma: 64 singular draws in a row");
}

/// Reduced lex basis of <g^(gamma_inv) : g in B>, recomputed by Buchberger.
template <Field F>
LexGB<F> change_coordinates_groebner(const F& field, const LexGB<F>& B, const Gamma<F>& gamma_inv) {
  BiPolyRing<F> ring(field);
  return buchberger(ring, apply_coords(ring, B.polys, gamma_inv));
}

}  // namespace bgb
