#pragma once

/**
 * @file lifting.hpp
 * @brief p-adic lifting of a lex basis, rational reconstruction, witness test.
 *
 * Every basis element g = lt(g) + sum_s c_s s (s ranging over the standard
 * monomials) is characterised as the unique solution of a linear system over
 * Z: lt(g) + sum_s c_s s equals a combination of the products m f_i with
 * total degree at most T. The system is factored once modulo p and then
 * solved p-adically digit by digit (Dixon), reusing the factorization at
 * every precision.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/matrix.hpp"
#include "bgb/oracle.hpp"
#include "bgb/poly.hpp"

namespace bgb {

// ---------------------------------------------------------------------------
// Rational reconstruction

struct Fraction {
  Integer eta;
  Integer theta;  // > 0
  bool operator==(const Fraction&) const = default;
};

/// The pair (eta, theta) with |eta| < p^(k/2)/2, 0 < theta <= p^(k/2),
/// gcd(theta, p) = 1 and eta = theta * alpha mod p^k, if one exists.
/// The bounds are tested exactly as 4 eta^2 < p^k and theta^2 <= p^k.
inline std::optional<Fraction> rational_reconstruct(const Integer& alpha, const Integer& p, unsigned long k) {
  const Integer M = power(p, k);
  Integer a = alpha % M;
  if (a < 0) a += M;
  Integer r0 = M, r1 = a, t0 = 0, t1 = 1;
  while (4 * r1 * r1 >= M) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Integer eta = r1, theta = t1;
  if (theta < 0) {
    eta = -eta;
    theta = -theta;
  }
  if (theta == 0 || theta * theta > M) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), theta.get_mpz_t(), p.get_mpz_t());
  if (g != 1) return std::nullopt;
  Integer check = (theta * a - eta) % M;
  if (check != 0) return std::nullopt;
  return Fraction{eta, theta};
}

inline std::optional<Rational> rational_reconstruct_q(const Integer& alpha, const Integer& p, unsigned long k) {
  auto f = rational_reconstruct(alpha, p, k);
  if (!f) return std::nullopt;
  Rational q(f->eta, f->theta);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Lifting state

struct LiftState {
  Integer p;
  std::uint64_t p64 = 0;
  std::size_t k = 1;
  bool unit = false;  // G = {1}: nothing to lift

  std::vector<BiPoly<IntegerRing>> F;  // generators over Z
  std::vector<Monomial> leads;         // lt(g) for each basis element
  std::vector<Monomial> staircase;     // standard monomials, decreasing lex
  std::size_t delta = 0;

  // Linear system A x = b_g over Z, rows indexed by monomials of degree <= T.
  std::size_t T = 0;
  std::size_t T_cap = 0;
  std::size_t n_rows = 0;
  std::map<std::pair<int, int>, std::size_t> row_of;  // (x, y) exponents -> row
  std::vector<std::vector<std::pair<std::size_t, Integer>>> cols;
  std::vector<std::size_t> R, C;  // pivot rows / columns of the mod p factorization
  Matrix<std::uint64_t> inv;      // (A[R, C])^-1 mod p

  // Per basis element: solution on C modulo p^k and the Dixon residual on R.
  std::vector<std::vector<Integer>> x;
  std::vector<std::vector<Integer>> residual;

  Integer modulus() const { return power(p, k); }
};

namespace detail {

inline std::size_t monomial_degree(Monomial m) { return static_cast<std::size_t>(m.x + m.y); }

inline void build_system(LiftState& s) {
  s.row_of.clear();
  s.cols.clear();
  std::size_t idx = 0;
  for (std::size_t deg = 0; deg <= s.T; ++deg)
    for (std::size_t j = 0; j <= deg; ++j) s.row_of[{static_cast<int>(deg - j), static_cast<int>(j)}] = idx++;
  s.n_rows = idx;
  for (auto m : s.staircase) s.cols.push_back({{s.row_of.at({m.x, m.y}), Integer(1)}});
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  for (const auto& f : s.F) {
    if (f.is_zero()) continue;
    const auto fd = static_cast<std::size_t>(zxy.total_degree(f));
    if (fd > s.T) continue;
    const auto terms = zxy.terms(f);
    for (std::size_t deg = 0; deg + fd <= s.T; ++deg)
      for (std::size_t j = 0; j <= deg; ++j) {
        const int mx = static_cast<int>(deg - j), my = static_cast<int>(j);
        std::vector<std::pair<std::size_t, Integer>> col;
        col.reserve(terms.size());
        for (const auto& t : terms) col.emplace_back(s.row_of.at({t.m.x + mx, t.m.y + my}), t.c);
        s.cols.push_back(std::move(col));
      }
  }
}

/// Column rank profile of A mod p (columns in order) with pivot rows, and
/// the inverse of the selected square block.
inline void factor_mod_p(LiftState& s) {
  const PrimeField fp(s.p64);
  const std::size_t n = s.n_rows;
  std::vector<std::vector<std::uint64_t>> basis;
  s.R.clear();
  s.C.clear();
  for (std::size_t j = 0; j < s.cols.size() && s.R.size() < n; ++j) {
    std::vector<std::uint64_t> v(n, 0);
    for (const auto& [r, a] : s.cols[j]) v[r] = fp.add(v[r], fp.from_integer(a));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t c = v[s.R[b]];
      if (c == 0) continue;
      const auto& bv = basis[b];
      for (std::size_t i = 0; i < n; ++i)
        if (bv[i]) v[i] = fp.sub(v[i], fp.mul(c, bv[i]));
    }
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    const std::uint64_t inv = fp.inv(v[piv]);
    for (auto& e : v) e = fp.mul(e, inv);
    basis.push_back(std::move(v));
    s.R.push_back(piv);
    s.C.push_back(j);
  }
  // Gauss-Jordan on A[R, C].
  const std::size_t r = s.R.size();
  std::vector<std::size_t> pos(n, r);
  for (std::size_t i = 0; i < r; ++i) pos[s.R[i]] = i;
  Matrix<std::uint64_t> a(r, 2 * r, 0);
  for (std::size_t jj = 0; jj < r; ++jj)
    for (const auto& [row, v] : s.cols[s.C[jj]])
      if (pos[row] < r) a(pos[row], jj) = fp.add(a(pos[row], jj), fp.from_integer(v));
  for (std::size_t i = 0; i < r; ++i) a(i, r + i) = 1;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < r && a(piv, c) == 0) ++piv;
    if (piv == r) throw UnluckyPrime("lifting system is singular modulo p");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * r; ++j) std::swap(a(piv, j), a(c, j));
    const std::uint64_t iv = fp.inv(a(c, c));
    for (std::size_t j = 0; j < 2 * r; ++j) a(c, j) = fp.mul(a(c, j), iv);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const std::uint64_t q = a(i, c);
      for (std::size_t j = c; j < 2 * r; ++j)
        if (a(c, j)) a(i, j) = fp.sub(a(i, j), fp.mul(q, a(c, j)));
    }
  }
  s.inv = Matrix<std::uint64_t>(r, r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s.inv(i, j) = a(i, r + j);
}

/// Right-hand side -e_lt restricted to the pivot rows.
inline std::vector<Integer> rhs_on_R(const LiftState& s, Monomial lt) {
  std::vector<Integer> b(s.R.size(), 0);
  const std::size_t row = s.row_of.at({lt.x, lt.y});
  for (std::size_t i = 0; i < s.R.size(); ++i)
    if (s.R[i] == row) b[i] = -1;
  return b;
}

/// One Dixon digit: x_j = inv * (r mod p), r <- (r - A[R,C] x_j) / p.
inline std::vector<std::uint64_t> dixon_digit(const LiftState& s, std::vector<Integer>& r,
                                              const std::vector<std::size_t>& pos) {
  const PrimeField fp(s.p64);
  const std::size_t n = s.R.size();
  std::vector<std::uint64_t> rm(n);
  for (std::size_t i = 0; i < n; ++i) rm[i] = fp.from_integer(r[i]);
  std::vector<std::uint64_t> xj(n, 0);
  const bool wide = (s.p64 >> 62) != 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 acc = 0;
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!rm[j] || !s.inv(i, j)) continue;
      if (wide) {
        out = fp.add(out, fp.mul(s.inv(i, j), rm[j]));
        continue;
      }
      // Products stay below 2^124, so two of them fit before a reduction.
      acc += static_cast<unsigned __int128>(s.inv(i, j)) * rm[j];
      if (acc >> 125) {
        out = fp.add(out, static_cast<std::uint64_t>(acc % s.p64));
        acc = 0;
      }
    }
    xj[i] = fp.add(out, static_cast<std::uint64_t>(acc % s.p64));
  }
  Integer tmp;
  for (std::size_t jj = 0; jj < n; ++jj) {
    if (!xj[jj]) continue;
    const Integer xv = PrimeField::from_u64(xj[jj]);
    for (const auto& [row, a] : s.cols[s.C[jj]]) {
      const std::size_t i = pos[row];
      if (i < n) {
        tmp = a * xv;
        r[i] -= tmp;
      }
    }
  }
  for (auto& e : r) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), s.p.get_mpz_t());
  return xj;
}

/// sum_j digits[j] p^j over [lo, hi), combined by halving.
inline Integer combine_digits(const std::vector<std::uint64_t>& digits, std::size_t lo, std::size_t hi,
                              const Integer& p) {
  if (hi - lo == 1) return PrimeField::from_u64(digits[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  return combine_digits(digits, lo, mid, p) + power(p, mid - lo) * combine_digits(digits, mid, hi, p);
}

inline std::vector<std::size_t> row_positions(const LiftState& s) {
  std::vector<std::size_t> pos(s.n_rows, s.R.size());
  for (std::size_t i = 0; i < s.R.size(); ++i) pos[s.R[i]] = i;
  return pos;
}

/// Adds `count` digits to every solution, starting from precision s.k.
inline void add_digits(LiftState& s, std::size_t count) {
  const auto pos = row_positions(s);
  const Integer pk = s.modulus();
  for (std::size_t g = 0; g < s.leads.size(); ++g) {
    std::vector<std::vector<std::uint64_t>> digits(s.C.size(), std::vector<std::uint64_t>(count));
    for (std::size_t j = 0; j < count; ++j) {
      const auto xj = dixon_digit(s, s.residual[g], pos);
      for (std::size_t c = 0; c < s.C.size(); ++c) digits[c][j] = xj[c];
    }
    for (std::size_t c = 0; c < s.C.size(); ++c) {
      if (std::all_of(digits[c].begin(), digits[c].end(), [](std::uint64_t v) { return v == 0; })) continue;
      s.x[g][c] += pk * combine_digits(digits[c], 0, count, s.p);
    }
  }
  s.k += count;
}

/// Every row of A x + e_lt vanishes modulo p^k.
inline bool verify_rows(const LiftState& s) {
  const Integer pk = s.modulus();
  for (std::size_t g = 0; g < s.leads.size(); ++g) {
    std::vector<Integer> acc(s.n_rows, 0);
    acc[s.row_of.at({s.leads[g].x, s.leads[g].y})] = 1;
    for (std::size_t c = 0; c < s.C.size(); ++c) {
      if (sgn(s.x[g][c]) == 0) continue;
      for (const auto& [row, a] : s.cols[s.C[c]]) acc[row] += a * s.x[g][c];
    }
    for (auto& v : acc) {
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
      if (sgn(v) != 0) return false;
    }
  }
  return true;
}

/// Factors the window-T system and solves modulo p; true when every basis
/// element is consistent modulo p.
inline bool setup_window(LiftState& s) {
  build_system(s);
  factor_mod_p(s);
  s.k = 0;
  s.x.assign(s.leads.size(), std::vector<Integer>(s.C.size(), 0));
  s.residual.clear();
  for (auto lt : s.leads) s.residual.push_back(rhs_on_R(s, lt));
  add_digits(s, 1);
  return verify_rows(s);
}

/// Restarts the lift with growing windows until the rows verify at
/// precision `target`.
inline void relift(LiftState& s, std::size_t target) {
  for (;;) {
    if (setup_window(s)) {
      if (target > 1) add_digits(s, target - 1);
      if (verify_rows(s)) return;
    }
    if (s.T >= s.T_cap) throw UnluckyPrime("lifting system inconsistent up to the degree cap");
    ++s.T;
  }
}

}  // namespace detail

/// Coefficients of the basis at the current precision (canonical
/// representatives in [0, p^k)).
inline std::vector<BiPoly<IntegerRing>> lifted_basis(const LiftState& s) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  if (s.unit) return {zxy.one()};
  const Integer pk = s.modulus();
  std::vector<BiPoly<IntegerRing>> out;
  for (std::size_t g = 0; g < s.leads.size(); ++g) {
    auto poly = zxy.monomial(1, static_cast<std::size_t>(s.leads[g].x), static_cast<std::size_t>(s.leads[g].y));
    for (std::size_t c = 0; c < s.C.size() && s.C[c] < s.staircase.size(); ++c) {
      Integer v = s.x[g][c] % pk;
      if (v < 0) v += pk;
      if (sgn(v) == 0) continue;
      const auto m = s.staircase[s.C[c]];
      poly = zxy.add(poly, zxy.monomial(v, static_cast<std::size_t>(m.x), static_cast<std::size_t>(m.y)));
    }
    out.push_back(std::move(poly));
  }
  return out;
}

inline LexGB<ResidueRing> lifted_basis_mod(const LiftState& s) {
  LexGB<ResidueRing> out;
  for (const auto& g : lifted_basis(s)) out.polys.push_back(reduce_mod(g, s.modulus()));
  return out;
}

/// Sets up the lifting system for <F> and its basis G1 modulo p (state at
/// k = 1). The window T grows from the largest degree in F and G1 until the
/// system is consistent modulo p, at most up to the default cap.
inline LiftState init_lift(const std::vector<BiPoly<IntegerRing>>& F, std::uint64_t p, const LexGB<PrimeField>& G1,
                           std::size_t extra_degree = 0) {
  LiftState s;
  s.p64 = p;
  s.p = PrimeField::from_u64(p);
  s.F = F;
  const PrimeField fp(p);
  BiPolyRing<PrimeField> ring(fp);
  if (G1.polys.empty()) throw NotZeroDimensional("empty basis");
  if (G1.is_unit_ideal()) {
    s.unit = true;
    s.k = 1;
    return s;
  }
  if (!is_zero_dimensional(ring, G1)) throw NotZeroDimensional("basis modulo p is not zero-dimensional");
  s.staircase = staircase(ring, G1);
  s.delta = s.staircase.size();
  std::size_t d = 0, gd = 0;
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  for (const auto& f : F)
    if (!f.is_zero()) d = std::max<std::size_t>(d, static_cast<std::size_t>(zxy.total_degree(f)));
  for (const auto& g : G1.polys) {
    s.leads.push_back(ring.lead(g));
    gd = std::max<std::size_t>(gd, static_cast<std::size_t>(ring.total_degree(g)));
  }
  s.T = std::max(d, gd);
  s.T_cap = s.T + d * d + d + extra_degree;
  for (;;) {
    if (detail::setup_window(s)) break;
    if (s.T >= s.T_cap) throw UnluckyPrime("lifting system inconsistent modulo p up to the degree cap");
    ++s.T;
  }
  // The mod p solution must reproduce G1 itself.
  const auto lifted = lifted_basis(s);
  for (std::size_t g = 0; g < lifted.size(); ++g)
    if (!ring.eq(reduce(ring, lifted[g]), G1.polys[g]))
      throw UnluckyPrime("basis modulo p is not the Groebner basis of the generators modulo p");
  return s;
}

/// Doubles the precision: from G mod p^(k/2) to G mod p^k. Rows are checked
/// modulo p^k afterwards; on failure the window grows and the lift restarts.
inline void lift_step(LiftState& s) {
  if (s.unit) {
    s.k *= 2;
    return;
  }
  const std::size_t target = 2 * s.k;
  detail::add_digits(s, target - s.k);
  if (!detail::verify_rows(s)) {
    ++s.T;
    if (s.T > s.T_cap) throw UnluckyPrime("lifting system inconsistent up to the degree cap");
    detail::relift(s, target);
  }
}

/// Coefficient-wise reconstruction of G mod p^k.
inline std::optional<LexGB<RationalField>> reconstruct_basis(const std::vector<BiPoly<IntegerRing>>& Gk,
                                                             const Integer& p, unsigned long k) {
  BiPolyRing<RationalField> qxy{RationalField{}};
  LexGB<RationalField> out;
  for (const auto& g : Gk) {
    std::vector<Term<RationalField>> terms;
    for (std::size_t j = 0; j < g.rows.size(); ++j)
      for (std::size_t i = 0; i < g.rows[j].c.size(); ++i) {
        const auto& a = g.rows[j].c[i];
        if (sgn(a) == 0) continue;
        auto q = rational_reconstruct_q(a, p, k);
        if (!q) return std::nullopt;
        terms.push_back({Monomial{static_cast<int>(i), static_cast<int>(j)}, *q});
      }
    out.polys.push_back(qxy.from_terms(terms));
  }
  return out;
}

inline std::optional<LexGB<RationalField>> reconstruct_basis(const LiftState& s) {
  return reconstruct_basis(lifted_basis(s), s.p, s.k);
}

/// G_rec mod p' equals the witness basis; false when p' divides a denominator.
inline bool verify_with_witness(const LexGB<RationalField>& G_rec, std::uint64_t p2, const LexGB<PrimeField>& G1p) {
  const PrimeField fp(p2);
  BiPolyRing<PrimeField> ring(fp);
  if (G_rec.size() != G1p.size()) return false;
  for (std::size_t i = 0; i < G_rec.size(); ++i) {
    BiPoly<PrimeField> red;
    try {
      red = reduce_rational(ring, G_rec.polys[i]);
    } catch (const DomainError&) {
      return false;
    }
    if (!ring.eq(red, G1p.polys[i])) return false;
  }
  return true;
}

}  // namespace bgb
