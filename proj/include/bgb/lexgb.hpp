#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bgb/poly.hpp"

namespace bgb {

/// Reduced minimal lexicographic Groebner basis (x < y). Polynomials are
/// monic and sorted by strictly decreasing leading monomial, hence by
/// strictly decreasing y-degree.
template <CoefficientRing R>
struct LexGB {
  std::vector<BiPoly<R>> polys;

  std::size_t size() const { return polys.size(); }
  bool is_unit_ideal() const {
    return polys.size() == 1 && polys[0].rows.size() == 1 && polys[0].rows[0].c.size() == 1;
  }
  bool operator==(const LexGB&) const = default;
};

/// Standard monomials under the leading terms of a zero-dimensional basis.
/// Empty when the basis lacks a pure power of x or a pure power of y (the
/// staircase is then infinite).
template <CoefficientRing R>
std::vector<Monomial> staircase(const BiPolyRing<R>& ring, const LexGB<R>& G) {
  std::vector<Monomial> leads;
  for (const auto& g : G.polys) leads.push_back(ring.lead(g));
  bool has_x = false, has_y = false;
  int ymax = 0;
  for (auto m : leads) {
    if (m.y == 0) has_x = true;
    if (m.x == 0) {
      has_y = true;
      ymax = std::max(ymax, m.y);
    }
  }
  std::vector<Monomial> out;
  if (!has_x || !has_y) return out;
  for (int j = 0; j < ymax; ++j) {
    // Smallest x-exponent among leads with y-degree <= j bounds row j.
    int xbound = -1;
    for (auto m : leads)
      if (m.y <= j && (xbound < 0 || m.x < xbound)) xbound = m.x;
    for (int i = 0; i < xbound; ++i) out.push_back({i, j});
  }
  std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) { return lex_less(b, a); });
  return out;
}

/// Dimension of the quotient algebra (0 for the unit ideal).
template <CoefficientRing R>
std::size_t quotient_degree(const BiPolyRing<R>& ring, const LexGB<R>& G) {
  return staircase(ring, G).size();
}

/// A basis describes a zero-dimensional proper ideal when it contains a pure
/// x-polynomial and an element whose leading monomial is a pure power of y.
template <CoefficientRing R>
bool is_zero_dimensional(const BiPolyRing<R>& ring, const LexGB<R>& G) {
  if (G.is_unit_ideal()) return true;
  bool pure_x = false, pure_y = false;
  for (const auto& g : G.polys) {
    auto m = ring.lead(g);
    if (m.y == 0) pure_x = true;
    if (m.x == 0) pure_y = true;
  }
  return pure_x && pure_y;
}

}  // namespace bgb
