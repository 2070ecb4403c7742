#pragma once

/**
 * @file groebner.hpp
 * @brief Lex Groebner bases from Hermite and Howell normal forms.
 *
 * The column span of the extended Sylvester matrix is the slice of the ideal
 * reachable with cofactors of y-degree < D. Reading the normal form from its
 * last nonzero column backwards yields one polynomial per y-degree (a
 * detaching basis); discarding redundant entries gives the reduced basis.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/normal_forms.hpp"
#include "bgb/poly.hpp"
#include "bgb/sylvester.hpp"

namespace bgb {

/// Entries A_{base}, ..., A_{top} with deg_y(A_i) = i.
template <Field F>
struct DetachingBasis {
  std::vector<BiPoly<F>> entries;  // entries[i - base] = A_i
  std::size_t base = 0;

  std::size_t top() const { return base + entries.size() - 1; }
  const BiPoly<F>& operator[](std::size_t i) const { return entries.at(i - base); }
};

enum class DeltaCase { Noether, TwoGen, General };

struct DeltaBound {
  DeltaCase kase = DeltaCase::General;
  std::size_t value = 0;
  std::size_t d_prime = 3;
};

inline DeltaBound delta_bound(DeltaCase kase, std::size_t d, std::size_t d_y) {
  if (d < 1) throw DomainError("degree must be positive");
  const std::size_t dp = std::max<std::size_t>(d, 3);
  switch (kase) {
    case DeltaCase::Noether:
      return {kase, d_y, dp};
    case DeltaCase::TwoGen:
      return {kase, 2 * dp * dp + dp, dp};
    case DeltaCase::General:
      break;
  }
  return {DeltaCase::General, 16 * dp * dp * dp * dp + 2 * dp * dp + 2 * dp, dp};
}

/// True when some generator has a nonzero constant coefficient on y^(d_y),
/// d_y the largest y-degree of the system.
template <CoefficientRing R>
bool has_noether_generator(const BiPolyRing<R>& ring, const std::vector<BiPoly<R>>& F) {
  int d_y = -1;
  for (const auto& f : F)
    if (!f.is_zero()) d_y = std::max(d_y, ring.deg_y(f));
  if (d_y < 0) return false;
  for (const auto& f : F)
    if (!f.is_zero() && ring.deg_y(f) == d_y && f.rows.back().c.size() == 1) return true;
  return false;
}

namespace detail {

template <Field F>
void check_detaching(const BiPolyRing<F>& ring, const DetachingBasis<F>& A) {
  for (std::size_t i = 0; i < A.entries.size(); ++i)
    if (A.entries[i].is_zero() || static_cast<std::size_t>(ring.deg_y(A.entries[i])) != A.base + i)
      throw NotZeroDimensional("normal form columns do not form a detaching basis (D too small?)");
}

template <Field F>
std::vector<UniPoly<F>> column_of(const PolyMatrix<F>& M, std::size_t j, std::size_t rows) {
  std::vector<UniPoly<F>> v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = M(i, j);
  return v;
}

}  // namespace detail

/// Scans the nonzero columns of the Hermite form of S from the last one
/// backwards and stops at the first polynomial monic in y.
template <Field F>
DetachingBasis<F> detaching_from_hermite(const F& field, const HermiteNF<F>& H, std::size_t d_y, std::size_t D) {
  BiPolyRing<F> ring(field);
  const std::size_t n = d_y + D;
  DetachingBasis<F> out;
  bool found = false;
  for (std::size_t c = H.rank(); c-- > 0;) {
    auto a = pi_n_inverse(ring, detail::column_of(H.H, c, n));
    const bool monic = ring.is_monic_in_y(a);
    out.entries.push_back(std::move(a));
    if (monic) {
      found = true;
      break;
    }
  }
  if (!found) throw NotZeroDimensional("no column monic in y: ideal not zero-dimensional or D too small");
  detail::check_detaching(ring, out);
  return out;
}

/// The detaching basis A_0, ..., A_top read from the last top+1 nonzero
/// columns of the Hermite form, without stopping at the first monic entry.
template <Field F>
DetachingBasis<F> detaching_basis_in_degree(const F& field, const HermiteNF<F>& H, std::size_t d_y, std::size_t D,
                                            std::size_t top) {
  BiPolyRing<F> ring(field);
  const std::size_t n = d_y + D;
  if (top + 1 > H.rank()) throw DomainError("Hermite form has too few nonzero columns for this degree");
  DetachingBasis<F> out;
  for (std::size_t c = H.rank(); c-- > H.rank() - top - 1;)
    out.entries.push_back(pi_n_inverse(ring, detail::column_of(H.H, c, n)));
  detail::check_detaching(ring, out);
  return out;
}

/// Keeps the entries whose leading monomial is not divisible by that of a
/// lower entry; the result is sorted by decreasing y-degree.
template <Field F>
LexGB<F> minimalize(const F& field, const DetachingBasis<F>& A) {
  BiPolyRing<F> ring(field);
  LexGB<F> out;
  int best = -1;
  for (const auto& a : A.entries) {
    const int m = ring.lead(a).x;
    if (best < 0 || m < best) {
      out.polys.push_back(a);
      best = m;
    }
    if (m == 0) break;
  }
  if (!out.polys.empty() && ring.deg_y(out.polys.front()) == 0 && out.polys.front().rows[0].c.size() == 1)
    return LexGB<F>{{ring.one()}};
  std::reverse(out.polys.begin(), out.polys.end());
  return out;
}

/// Minimalization of an already reduced basis (listed in any order).
template <Field F>
LexGB<F> minimalize(const F& field, const LexGB<F>& G) {
  BiPolyRing<F> ring(field);
  DetachingBasis<F> A;
  A.entries = G.polys;
  std::sort(A.entries.begin(), A.entries.end(),
            [&](const BiPoly<F>& a, const BiPoly<F>& b) { return ring.deg_y(a) < ring.deg_y(b); });
  return minimalize(field, A);
}

/// Hermite form of S (the top d_y+D rows of the Hermite form of S^sq).
template <Field F, class Rng>
HermiteNF<F> sylvester_hermite(const F& field, const std::vector<BiPoly<F>>& F_, std::size_t D, Rng& rng) {
  BiPolyRing<F> ring(field);
  const auto es = build_extended_sylvester(ring, F_, D);
  const auto sq = squarify(field, es, rng);
  const auto hsq = hermite_form(field, sq.matrix);
  const std::size_t n = es.rows();
  HermiteNF<F> h;
  h.H = PolyMatrix<F>(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h.H(i, j) = hsq.H(i, j);
  for (auto r : hsq.pivot_rows)
    if (r < n) h.pivot_rows.push_back(r);
  if (h.pivot_rows.size() != n)
    throw NotZeroDimensional("Hermite form of S^sq lacks full rank in its top block");
  return h;
}

template <Field F>
std::size_t max_deg_y(const BiPolyRing<F>& ring, const std::vector<BiPoly<F>>& F_) {
  std::size_t d_y = 0;
  for (const auto& f : F_)
    if (!f.is_zero()) d_y = std::max<std::size_t>(d_y, static_cast<std::size_t>(ring.deg_y(f)));
  return d_y;
}

/// Reduced lex basis of <F> for D >= Delta(F), D >= d_y.
template <Field F, class Rng>
LexGB<F> hermite_groebner_basis(const F& field, const std::vector<BiPoly<F>>& F_, std::size_t D, Rng& rng) {
  BiPolyRing<F> ring(field);
  const std::size_t d_y = max_deg_y(ring, F_);
  const auto H = sylvester_hermite(field, F_, D, rng);
  return minimalize(field, detaching_from_hermite(field, H, d_y, D));
}

template <Field F>
LexGB<F> hermite_groebner_basis(const F& field, const std::vector<BiPoly<F>>& F_, std::size_t D) {
  std::mt19937_64 rng(0x5eed);
  return hermite_groebner_basis(field, F_, D, rng);
}

/// Reduced lex basis of <F, x^k> from the Howell form of S mod x^k.
template <Field F>
LexGB<F> howell_groebner_basis(const F& field, const std::vector<BiPoly<F>>& F_, std::size_t k, std::size_t D) {
  BiPolyRing<F> ring(field);
  UniPolyRing<F> kx(field);
  const auto es = build_extended_sylvester(ring, F_, D);
  const std::size_t n = es.rows();
  const auto h = howell_form(field, es.S, k);
  if (h.rank() == 0) throw NotZeroDimensional("Howell form of S mod x^k is zero");
  const std::size_t r = h.pivot_rows.back();

  DetachingBasis<F> A;
  // Missing multiples of x^k below the last pivot: x^k y^(n-1-q) for q > r.
  for (std::size_t q = n; q-- > r + 1;) {
    std::vector<UniPoly<F>> col(n);
    col[q] = kx.monomial(field.one(), k);
    A.entries.push_back(pi_n_inverse(ring, col));
  }
  bool found = false;
  for (std::size_t c = h.rank(); c-- > 0;) {
    auto a = pi_n_inverse(ring, detail::column_of(h.B, c, n));
    const bool monic = ring.is_monic_in_y(a);
    A.entries.push_back(std::move(a));
    if (monic) {
      found = true;
      break;
    }
  }
  if (!found) throw NotZeroDimensional("no column monic in y: ideal not zero-dimensional or D too small");
  detail::check_detaching(ring, A);
  return minimalize(field, A);
}

/// True when the basis contains the pure power x^k.
template <Field F>
bool contains_x_power(const F& field, const LexGB<F>& G, std::size_t k) {
  BiPolyRing<F> ring(field);
  const auto xk = ring.monomial(field.one(), k, 0);
  return std::any_of(G.polys.begin(), G.polys.end(), [&](const BiPoly<F>& g) { return ring.eq(g, xk); });
}

/// Basis of the <x,y>-primary component, assuming the projection of V(F) to
/// the x-line is one-to-one: k = 1, 2, 4, ... until x^k leaves the output.
template <Field F>
LexGB<F> groebner_basis_at_zero(const F& field, const std::vector<BiPoly<F>>& F_, std::size_t D = 0) {
  BiPolyRing<F> ring(field);
  std::size_t d = 0;
  for (const auto& f : F_)
    if (!f.is_zero()) d = std::max<std::size_t>(d, static_cast<std::size_t>(ring.total_degree(f)));
  if (d == 0) {
    for (const auto& f : F_)
      if (!f.is_zero()) return LexGB<F>{{ring.one()}};
    throw NotZeroDimensional("zero system");
  }
  if (D == 0) D = d;
  D = std::max(D, max_deg_y(ring, F_));
  const std::size_t cap = 2 * d * d;
  for (std::size_t k = 1; k <= cap; k *= 2) {
    auto G = howell_groebner_basis(field, F_, k, D);
    if (!contains_x_power(field, G, k)) return G;
  }
  throw NotZeroDimensional("no power of x found in the primary component below the Bezout cap");
}

}  // namespace bgb
