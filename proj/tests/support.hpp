#pragma once

// Shared helpers for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "bgb/bgb.hpp"

namespace bgbtest {

using namespace bgb;

inline BiPoly<IntegerRing> zpoly(const std::string& s) { return parse_polynomial(s); }

template <CoefficientRing R>
BiPoly<R> poly(const BiPolyRing<R>& ring, const std::string& s) {
  return reduce(ring, parse_polynomial(s));
}

inline BiPoly<RationalField> qpoly(const std::string& s) { return to_rational(parse_polynomial(s)); }

template <CoefficientRing R>
std::vector<BiPoly<R>> polys(const BiPolyRing<R>& ring, const std::vector<std::string>& ss) {
  std::vector<BiPoly<R>> out;
  for (const auto& s : ss) out.push_back(poly(ring, s));
  return out;
}

template <CoefficientRing R>
LexGB<R> basis(const BiPolyRing<R>& ring, const std::vector<std::string>& ss) {
  return LexGB<R>{polys(ring, ss)};
}

inline std::vector<BiPoly<IntegerRing>> zpolys(const std::vector<std::string>& ss) {
  std::vector<BiPoly<IntegerRing>> out;
  for (const auto& s : ss) out.push_back(zpoly(s));
  return out;
}

inline LexGB<RationalField> qbasis(const std::vector<std::string>& ss) {
  LexGB<RationalField> out;
  for (const auto& s : ss) out.polys.push_back(qpoly(s));
  return out;
}

/// Random integer polynomial of total degree exactly d (when possible) with
/// coefficients in [-c, c].
template <class Rng>
BiPoly<IntegerRing> random_zpoly(Rng& rng, int d, int c, double density = 0.6) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  std::uniform_int_distribution<int> coef(-c, c);
  std::bernoulli_distribution keep(density);
  for (;;) {
    BiPoly<IntegerRing> f;
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i + j <= d; ++i)
        if (keep(rng)) f = zxy.add(f, zxy.monomial(Integer(coef(rng)), i, j));
    if (!f.is_zero() && zxy.total_degree(f) == d) return f;
  }
}

inline std::vector<BiPoly<RationalField>> to_q(const std::vector<BiPoly<IntegerRing>>& F) {
  std::vector<BiPoly<RationalField>> out;
  for (const auto& f : F) out.push_back(to_rational(f));
  return out;
}

inline LexGB<RationalField> oracle_q(const std::vector<BiPoly<IntegerRing>>& F) {
  BiPolyRing<RationalField> qxy{RationalField{}};
  return buchberger(qxy, to_q(F));
}

/// Random polynomial over F_p with every y-degree below dy and total
/// degree at most d.
template <class Rng>
BiPoly<PrimeField> random_fp_poly(const BiPolyRing<PrimeField>& ring, Rng& rng, int d, int dy, double density = 0.7) {
  std::uniform_int_distribution<std::uint64_t> coef(0, ring.base().modulus() - 1);
  std::bernoulli_distribution keep(density);
  BiPoly<PrimeField> f;
  for (int j = 0; j <= dy; ++j)
    for (int i = 0; i + j <= d; ++i)
      if (keep(rng)) f = ring.add(f, ring.monomial(coef(rng), i, j));
  return f;
}

/// Random system over F_p whose first generator has a nonzero constant
/// coefficient on y^(d_y) and whose other generators have y-degree <= d_y.
template <class Rng>
std::vector<BiPoly<PrimeField>> random_noether_system(const BiPolyRing<PrimeField>& ring, Rng& rng, int t, int d) {
  std::uniform_int_distribution<std::uint64_t> unit(1, ring.base().modulus() - 1);
  std::uniform_int_distribution<int> deg(1, d);
  std::vector<BiPoly<PrimeField>> F;
  const int dy = deg(rng);
  F.push_back(ring.add(ring.monomial(unit(rng), 0, dy), random_fp_poly(ring, rng, dy, dy - 1)));
  for (int i = 1; i < t; ++i) {
    BiPoly<PrimeField> f;
    while (f.is_zero()) f = random_fp_poly(ring, rng, deg(rng), dy);
    F.push_back(f);
  }
  return F;
}

template <class Rng>
UniPoly<PrimeField> random_uni(const UniPolyRing<PrimeField>& kx, Rng& rng, int deg) {
  std::uniform_int_distribution<std::uint64_t> c(0, kx.base().modulus() - 1);
  std::vector<std::uint64_t> v(static_cast<std::size_t>(deg + 1));
  for (auto& e : v) e = c(rng);
  return kx.make(v);
}

template <class Rng>
PolyMatrix<PrimeField> random_matrix(const UniPolyRing<PrimeField>& kx, Rng& rng, std::size_t r, std::size_t c,
                                     int deg) {
  PolyMatrix<PrimeField> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_uni(kx, rng, deg);
  return m;
}

/// M times a random unimodular matrix built from elementary column operations.
template <class Rng>
PolyMatrix<PrimeField> scramble(const UniPolyRing<PrimeField>& kx, PolyMatrix<PrimeField> M, Rng& rng, int ops) {
  std::uniform_int_distribution<std::size_t> col(0, M.cols() - 1);
  std::uniform_int_distribution<std::uint64_t> unit(1, kx.base().modulus() - 1);
  for (int o = 0; o < ops; ++o) {
    const std::size_t a = col(rng), b = col(rng);
    switch (o % 3) {
      case 0:
        M.swap_columns(a, b);
        break;
      case 1: {
        const auto s = unit(rng);
        for (std::size_t i = 0; i < M.rows(); ++i) M(i, a) = kx.scale(s, M(i, a));
        break;
      }
      default:
        if (a == b) break;
        const auto q = random_uni(kx, rng, 2);
        for (std::size_t i = 0; i < M.rows(); ++i) M(i, a) = kx.add(M(i, a), kx.mul(q, M(i, b)));
    }
  }
  return M;
}


}  // namespace bgbtest
