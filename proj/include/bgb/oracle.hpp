#pragma once

/**
 * @file oracle.hpp
 * @brief Reference Groebner bases by Buchberger's algorithm (lex, x < y).
 *
 * Deliberately plain: pair selection by smallest lcm degree and the
 * coprime-leading-monomial criterion only. Used as an independent oracle in
 * tests and to move bases back through a change of coordinates modulo p.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bgb/lexgb.hpp"
#include "bgb/poly.hpp"

namespace bgb {

/// Remainder of multivariate division of f by G (any list of nonzero
/// polynomials): no monomial of the result is divisible by a leading
/// monomial of G.
template <Field F>
BiPoly<F> normal_form(const BiPolyRing<F>& ring, const BiPoly<F>& f, const std::vector<BiPoly<F>>& G) {
  const F& field = ring.base();
  std::vector<Monomial> leads;
  std::vector<typename F::value_type> inv_lc;
  for (const auto& g : G) {
    leads.push_back(ring.lead(g));
    inv_lc.push_back(field.inv(ring.lc(g)));
  }
  BiPoly<F> r = f;
  BiPoly<F> done;
  // Walk the monomials of r from the largest down; reductions only touch
  // smaller monomials, so a cursor suffices.
  int j = static_cast<int>(r.rows.size()) - 1;
  while (j >= 0) {
    if (static_cast<std::size_t>(j) >= r.rows.size()) {
      j = static_cast<int>(r.rows.size()) - 1;
      continue;
    }
    auto& row = r.rows[static_cast<std::size_t>(j)];
    int i = static_cast<int>(row.c.size()) - 1;
    bool reduced = false;
    for (; i >= 0; --i) {
      const auto& a = row.c[static_cast<std::size_t>(i)];
      if (field.is_zero(a)) continue;
      Monomial m{i, j};
      for (std::size_t g = 0; g < G.size(); ++g) {
        if (!divides(leads[g], m)) continue;
        auto factor = field.mul(a, inv_lc[g]);
        r = ring.sub(r, ring.scale(factor, ring.shift(G[g], static_cast<std::size_t>(i - leads[g].x),
                                                      static_cast<std::size_t>(j - leads[g].y))));
        reduced = true;
        break;
      }
      if (reduced) break;
      // Irreducible term: move it to the output.
      done = ring.add(done, ring.monomial(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      row.c[static_cast<std::size_t>(i)] = field.zero();
    }
    if (!reduced) {
      ring.trim(r);
      --j;
    }
  }
  return ring.add(done, r);
}

template <Field F>
BiPoly<F> normal_form(const BiPolyRing<F>& ring, const BiPoly<F>& f, const LexGB<F>& G) {
  return normal_form(ring, f, G.polys);
}

/// Turns any Groebner basis into the reduced minimal one, sorted by
/// decreasing leading monomial.
template <Field F>
LexGB<F> reduce_basis(const BiPolyRing<F>& ring, std::vector<BiPoly<F>> G) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const BiPoly<F>& g) { return g.is_zero(); }), G.end());
  for (const auto& g : G)
    if (ring.is_unit(g)) return LexGB<F>{{ring.one()}};
  // Minimal: drop elements whose leading monomial is divisible by another's.
  std::vector<BiPoly<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto mi = ring.lead(G[i]);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto mj = ring.lead(G[j]);
      if (divides(mj, mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(ring.monic(G[i]));
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BiPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto m = ring.lead(minimal[i]);
    auto tail = ring.sub(minimal[i], ring.monomial(ring.base().one(), static_cast<std::size_t>(m.x),
                                                   static_cast<std::size_t>(m.y)));
    minimal[i] = ring.add(ring.monomial(ring.base().one(), static_cast<std::size_t>(m.x), static_cast<std::size_t>(m.y)),
                          normal_form(ring, tail, others));
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const BiPoly<F>& a, const BiPoly<F>& b) { return lex_less(ring.lead(b), ring.lead(a)); });
  return LexGB<F>{std::move(minimal)};
}

template <Field F>
BiPoly<F> s_polynomial(const BiPolyRing<F>& ring, const BiPoly<F>& f, const BiPoly<F>& g) {
  const auto mf = ring.lead(f), mg = ring.lead(g);
  const Monomial l{std::max(mf.x, mg.x), std::max(mf.y, mg.y)};
  const auto& field = ring.base();
  auto a = ring.scale(field.inv(ring.lc(f)),
                      ring.shift(f, static_cast<std::size_t>(l.x - mf.x), static_cast<std::size_t>(l.y - mf.y)));
  auto b = ring.scale(field.inv(ring.lc(g)),
                      ring.shift(g, static_cast<std::size_t>(l.x - mg.x), static_cast<std::size_t>(l.y - mg.y)));
  return ring.sub(a, b);
}

/// Reduced minimal lex Groebner basis of <F>.
template <Field F>
LexGB<F> buchberger(const BiPolyRing<F>& ring, const std::vector<BiPoly<F>>& input) {
  std::vector<BiPoly<F>> G;
  for (const auto& f : input)
    if (!f.is_zero()) G.push_back(ring.monic(f));
  if (G.empty()) return LexGB<F>{};
  for (const auto& g : G)
    if (ring.is_unit(g)) return LexGB<F>{{ring.one()}};

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    const auto a = ring.lead(G[pr.first]), b = ring.lead(G[pr.second]);
    return std::max(a.x, b.x) + std::max(a.y, b.y);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const auto& a, const auto& b) { return lcm_degree(a) < lcm_degree(b); });
    const auto [i, j] = *it;
    pairs.erase(it);
    const auto mi = ring.lead(G[i]), mj = ring.lead(G[j]);
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if ((mi.x == 0 || mj.x == 0) && (mi.y == 0 || mj.y == 0)) continue;
    auto h = normal_form(ring, s_polynomial(ring, G[i], G[j]), G);
    if (h.is_zero()) continue;
    h = ring.monic(h);
    if (ring.is_unit(h)) return LexGB<F>{{ring.one()}};
    const std::size_t n = G.size();
    G.push_back(std::move(h));
    for (std::size_t a = 0; a < n; ++a) pairs.emplace_back(a, n);
  }
  return reduce_basis(ring, std::move(G));
}

/// <x,y>-primary component of <F> computed as the basis of F + (x^(d^2), y^(d^2)).
template <Field F>
LexGB<F> primary_at_origin_oracle(const BiPolyRing<F>& ring, std::vector<BiPoly<F>> input, int d) {
  if (d < 1) throw DomainError("degree bound must be positive");
  const auto e = static_cast<std::size_t>(d * d);
  input.push_back(ring.monomial(ring.base().one(), e, 0));
  input.push_back(ring.monomial(ring.base().one(), 0, e));
  return buchberger(ring, input);
}

/// Every element monic, leading monomials pairwise non-divisible, and no
/// non-leading monomial divisible by any leading monomial.
template <Field F>
bool is_reduced_basis(const BiPolyRing<F>& ring, const LexGB<F>& G) {
  std::vector<Monomial> leads;
  for (const auto& g : G.polys) {
    if (g.is_zero() || !ring.base().eq(ring.lc(g), ring.base().one())) return false;
    leads.push_back(ring.lead(g));
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (i > 0 && !lex_less(leads[i], leads[i - 1])) return false;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j && divides(leads[j], leads[i])) return false;
    for (const auto& t : ring.terms(G.polys[i])) {
      if (t.m == leads[i]) continue;
      for (auto l : leads)
        if (divides(l, t.m)) return false;
    }
  }
  return true;
}

}  // namespace bgb
