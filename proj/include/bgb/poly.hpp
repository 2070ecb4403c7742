#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate and bivariate polynomials over a coefficient ring.
 *
 * UniPoly stores coefficients by increasing x-degree. BiPoly stores one
 * UniPoly per power of y (row i is the coefficient of y^i). Both are trimmed:
 * the highest-index entry is nonzero, and the zero polynomial is empty.
 *
 * Arithmetic lives in the context objects UniPolyRing and BiPolyRing, which
 * wrap the coefficient ring. UniPolyRing itself models CoefficientRing, so
 * matrices of univariate polynomials reuse the generic matrix code.
 */

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/rings.hpp"

namespace bgb {

template <CoefficientRing R>
struct UniPoly {
  using value_type = typename R::value_type;
  std::vector<value_type> c;

  bool is_zero() const { return c.empty(); }
  bool operator==(const UniPoly&) const = default;
};

template <CoefficientRing R>
class UniPolyRing {
 public:
  using coeff_ring = R;
  using E = typename R::value_type;
  using value_type = UniPoly<R>;
  static constexpr bool is_field = false;

  explicit UniPolyRing(R base) : base_(std::move(base)) {}
  const R& base() const { return base_; }

  value_type zero() const { return {}; }
  value_type one() const { return constant(base_.one()); }
  value_type x() const { return monomial(base_.one(), 1); }
  value_type constant(const E& a) const {
    value_type f;
    if (!base_.is_zero(a)) f.c.push_back(a);
    return f;
  }
  value_type monomial(const E& a, std::size_t e) const {
    value_type f;
    if (base_.is_zero(a)) return f;
    f.c.assign(e + 1, base_.zero());
    f.c[e] = a;
    return f;
  }
  value_type make(std::vector<E> coeffs) const {
    value_type f{std::move(coeffs)};
    trim(f);
    return f;
  }
  value_type from_integer(const Integer& z) const { return constant(base_.from_integer(z)); }

  void trim(value_type& f) const {
    while (!f.c.empty() && base_.is_zero(f.c.back())) f.c.pop_back();
  }

  /// Degree in x, or -1 for the zero polynomial.
  int degree(const value_type& f) const { return static_cast<int>(f.c.size()) - 1; }
  /// Index of the lowest nonzero coefficient, or -1 for zero.
  int valuation(const value_type& f) const {
    for (std::size_t i = 0; i < f.c.size(); ++i)
      if (!base_.is_zero(f.c[i])) return static_cast<int>(i);
    return -1;
  }
  const E& lc(const value_type& f) const {
    if (f.c.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return f.c.back();
  }
  E coeff(const value_type& f, std::size_t i) const { return i < f.c.size() ? f.c[i] : base_.zero(); }

  bool is_zero(const value_type& f) const { return f.c.empty(); }
  bool eq(const value_type& f, const value_type& g) const {
    if (f.c.size() != g.c.size()) return false;
    for (std::size_t i = 0; i < f.c.size(); ++i)
      if (!base_.eq(f.c[i], g.c[i])) return false;
    return true;
  }
  bool is_unit(const value_type& f) const { return f.c.size() == 1 && base_.is_unit(f.c[0]); }
  value_type inv(const value_type& f) const {
    if (!is_unit(f)) throw DomainError("polynomial is not a unit");
    return constant(base_.inv(f.c[0]));
  }

  value_type add(const value_type& f, const value_type& g) const {
    const value_type& big = f.c.size() >= g.c.size() ? f : g;
    const value_type& small = f.c.size() >= g.c.size() ? g : f;
    value_type r = big;
    for (std::size_t i = 0; i < small.c.size(); ++i) r.c[i] = base_.add(r.c[i], small.c[i]);
    trim(r);
    return r;
  }
  value_type sub(const value_type& f, const value_type& g) const {
    value_type r = f;
    if (r.c.size() < g.c.size()) r.c.resize(g.c.size(), base_.zero());
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = base_.sub(r.c[i], g.c[i]);
    trim(r);
    return r;
  }
  value_type neg(const value_type& f) const {
    value_type r = f;
    for (auto& a : r.c) a = base_.neg(a);
    return r;
  }
  value_type mul(const value_type& f, const value_type& g) const {
    if (f.c.empty() || g.c.empty()) return {};
    value_type r;
    r.c.assign(f.c.size() + g.c.size() - 1, base_.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      if (base_.is_zero(f.c[i])) continue;
      for (std::size_t j = 0; j < g.c.size(); ++j)
        r.c[i + j] = base_.add(r.c[i + j], base_.mul(f.c[i], g.c[j]));
    }
    trim(r);
    return r;
  }
  value_type scale(const E& a, const value_type& f) const {
    value_type r = f;
    for (auto& v : r.c) v = base_.mul(a, v);
    trim(r);
    return r;
  }
  /// f * x^e
  value_type shift(const value_type& f, std::size_t e) const {
    if (f.c.empty()) return f;
    value_type r;
    r.c.assign(e, base_.zero());
    r.c.insert(r.c.end(), f.c.begin(), f.c.end());
    return r;
  }
  value_type pow(value_type f, unsigned e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, f);
      e >>= 1;
      if (e) f = mul(f, f);
    }
    return r;
  }
  /// f mod x^k
  value_type truncate(const value_type& f, std::size_t k) const {
    if (f.c.size() <= k) return f;
    value_type r{std::vector<E>(f.c.begin(), f.c.begin() + static_cast<std::ptrdiff_t>(k))};
    trim(r);
    return r;
  }
  /// f div x^e (drops the low coefficients)
  value_type unshift(const value_type& f, std::size_t e) const {
    if (f.c.size() <= e) return {};
    return value_type{std::vector<E>(f.c.begin() + static_cast<std::ptrdiff_t>(e), f.c.end())};
  }

  /// Euclidean division. The leading coefficient of g must be a unit;
  /// otherwise DomainError (over Z/p^k this signals an unlucky modulus).
  std::pair<value_type, value_type> divrem(const value_type& f, const value_type& g) const {
    if (g.c.empty()) throw DomainError("polynomial division by zero");
    if (!base_.is_unit(g.c.back()))
      throw DomainError("leading coefficient of the divisor is not invertible");
    E inv_lc = base_.inv(g.c.back());
    value_type r = f;
    value_type q;
    if (r.c.size() < g.c.size()) return {q, r};
    q.c.assign(r.c.size() - g.c.size() + 1, base_.zero());
    for (std::size_t i = r.c.size(); i-- >= g.c.size();) {
      if (base_.is_zero(r.c[i])) continue;
      E factor = base_.mul(r.c[i], inv_lc);
      std::size_t off = i + 1 - g.c.size();
      q.c[off] = factor;
      for (std::size_t j = 0; j < g.c.size(); ++j)
        r.c[off + j] = base_.sub(r.c[off + j], base_.mul(factor, g.c[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }
  value_type rem(const value_type& f, const value_type& g) const { return divrem(f, g).second; }

  E eval(const value_type& f, const E& a) const {
    E r = base_.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) r = base_.add(base_.mul(r, a), f.c[i]);
    return r;
  }

  value_type monic(const value_type& f) const
    requires Field<R>
  {
    if (f.c.empty()) return f;
    return scale(base_.inv(f.c.back()), f);
  }

  /// Extended gcd over a field: returns (g, s, t) with s*f + t*h = g and g
  /// monic (g = 0 only when f = h = 0).
  std::tuple<value_type, value_type, value_type> xgcd(const value_type& f, const value_type& h) const
    requires Field<R>
  {
    value_type r0 = f, r1 = h, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
    while (!r1.c.empty()) {
      auto [q, r] = divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      value_type s2 = sub(s0, mul(q, s1));
      value_type t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.c.empty()) return {r0, s0, t0};
    E u = base_.inv(r0.c.back());
    return {scale(u, r0), scale(u, s0), scale(u, t0)};
  }

  bool operator==(const UniPolyRing& o) const { return base_ == o.base_; }

 private:
  R base_;
};

/// Exponent pair of a monomial x^x * y^y.
struct Monomial {
  int x = 0;
  int y = 0;
  bool operator==(const Monomial&) const = default;
};

/// Lexicographic order with x < y: compare y-degrees first, then x-degrees.
inline bool lex_less(Monomial a, Monomial b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }
inline bool divides(Monomial a, Monomial b) { return a.x <= b.x && a.y <= b.y; }

template <CoefficientRing R>
struct BiPoly {
  std::vector<UniPoly<R>> rows;

  bool is_zero() const { return rows.empty(); }
  bool operator==(const BiPoly&) const = default;
};

template <CoefficientRing R>
struct Term {
  Monomial m;
  typename R::value_type c;
};

template <CoefficientRing R>
class BiPolyRing {
 public:
  using coeff_ring = R;
  using E = typename R::value_type;
  using value_type = BiPoly<R>;
  using Row = UniPoly<R>;
  static constexpr bool is_field = false;

  explicit BiPolyRing(R base) : uni_(std::move(base)) {}
  const R& base() const { return uni_.base(); }
  const UniPolyRing<R>& uni() const { return uni_; }

  value_type zero() const { return {}; }
  value_type one() const { return constant(base().one()); }
  value_type constant(const E& a) const { return monomial(a, 0, 0); }
  value_type from_integer(const Integer& z) const { return constant(base().from_integer(z)); }
  value_type x() const { return monomial(base().one(), 1, 0); }
  value_type y() const { return monomial(base().one(), 0, 1); }
  /// a * x^i * y^j
  value_type monomial(const E& a, std::size_t i, std::size_t j) const {
    value_type f;
    if (base().is_zero(a)) return f;
    f.rows.resize(j + 1);
    f.rows[j] = uni_.monomial(a, i);
    return f;
  }
  value_type from_rows(std::vector<Row> rows) const {
    value_type f{std::move(rows)};
    trim(f);
    return f;
  }
  /// Embeds a univariate polynomial in x.
  value_type from_x(const Row& r) const { return from_rows({r}); }
  value_type from_terms(const std::vector<Term<R>>& terms) const {
    value_type f;
    for (const auto& t : terms) f = add(f, monomial(t.c, t.m.x, t.m.y));
    return f;
  }

  void trim(value_type& f) const {
    for (auto& r : f.rows) uni_.trim(r);
    while (!f.rows.empty() && f.rows.back().c.empty()) f.rows.pop_back();
  }

  bool is_zero(const value_type& f) const { return f.rows.empty(); }
  bool eq(const value_type& f, const value_type& g) const {
    if (f.rows.size() != g.rows.size()) return false;
    for (std::size_t i = 0; i < f.rows.size(); ++i)
      if (!uni_.eq(f.rows[i], g.rows[i])) return false;
    return true;
  }
  bool is_unit(const value_type& f) const { return f.rows.size() == 1 && uni_.is_unit(f.rows[0]); }
  value_type inv(const value_type& f) const { return from_rows({uni_.inv(f.rows.at(0))}); }

  /// y-degree; the zero polynomial has none.
  int deg_y(const value_type& f) const {
    if (f.rows.empty()) throw DomainError("deg_y of the zero polynomial");
    return static_cast<int>(f.rows.size()) - 1;
  }
  int deg_x(const value_type& f) const {
    if (f.rows.empty()) throw DomainError("deg_x of the zero polynomial");
    int d = -1;
    for (const auto& r : f.rows) d = std::max(d, uni_.degree(r));
    return d;
  }
  int total_degree(const value_type& f) const {
    if (f.rows.empty()) throw DomainError("degree of the zero polynomial");
    int d = -1;
    for (std::size_t i = 0; i < f.rows.size(); ++i)
      if (!f.rows[i].c.empty()) d = std::max(d, static_cast<int>(i) + uni_.degree(f.rows[i]));
    return d;
  }
  E coeff(const value_type& f, std::size_t i, std::size_t j) const {
    return j < f.rows.size() ? uni_.coeff(f.rows[j], i) : base().zero();
  }
  /// Coefficient of y^j as a polynomial in x.
  Row row(const value_type& f, std::size_t j) const { return j < f.rows.size() ? f.rows[j] : Row{}; }

  /// Leading monomial for lex with x < y.
  Monomial lead(const value_type& f) const {
    int n = deg_y(f);
    return {uni_.degree(f.rows.back()), n};
  }
  const E& lc(const value_type& f) const {
    if (f.rows.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return f.rows.back().c.back();
  }
  /// True when the coefficient of the top power of y is the constant 1.
  bool is_monic_in_y(const value_type& f) const {
    return !f.rows.empty() && f.rows.back().c.size() == 1 && base().eq(f.rows.back().c[0], base().one());
  }

  /// Terms in decreasing lex order.
  std::vector<Term<R>> terms(const value_type& f) const {
    std::vector<Term<R>> out;
    for (std::size_t j = f.rows.size(); j-- > 0;)
      for (std::size_t i = f.rows[j].c.size(); i-- > 0;)
        if (!base().is_zero(f.rows[j].c[i]))
          out.push_back({Monomial{static_cast<int>(i), static_cast<int>(j)}, f.rows[j].c[i]});
    return out;
  }
  std::size_t term_count(const value_type& f) const {
    std::size_t n = 0;
    for (const auto& r : f.rows)
      for (const auto& a : r.c)
        if (!base().is_zero(a)) ++n;
    return n;
  }

  value_type add(const value_type& f, const value_type& g) const {
    value_type r = f;
    if (r.rows.size() < g.rows.size()) r.rows.resize(g.rows.size());
    for (std::size_t i = 0; i < g.rows.size(); ++i) r.rows[i] = uni_.add(r.rows[i], g.rows[i]);
    trim(r);
    return r;
  }
  value_type sub(const value_type& f, const value_type& g) const {
    value_type r = f;
    if (r.rows.size() < g.rows.size()) r.rows.resize(g.rows.size());
    for (std::size_t i = 0; i < g.rows.size(); ++i) r.rows[i] = uni_.sub(r.rows[i], g.rows[i]);
    trim(r);
    return r;
  }
  value_type neg(const value_type& f) const {
    value_type r = f;
    for (auto& row : r.rows) row = uni_.neg(row);
    return r;
  }
  value_type mul(const value_type& f, const value_type& g) const {
    if (f.rows.empty() || g.rows.empty()) return {};
    value_type r;
    r.rows.resize(f.rows.size() + g.rows.size() - 1);
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
      if (f.rows[i].c.empty()) continue;
      for (std::size_t j = 0; j < g.rows.size(); ++j)
        r.rows[i + j] = uni_.add(r.rows[i + j], uni_.mul(f.rows[i], g.rows[j]));
    }
    trim(r);
    return r;
  }
  value_type scale(const E& a, const value_type& f) const {
    value_type r = f;
    for (auto& row : r.rows) row = uni_.scale(a, row);
    trim(r);
    return r;
  }
  /// f * x^i * y^j
  value_type shift(const value_type& f, std::size_t i, std::size_t j) const {
    if (f.rows.empty()) return f;
    value_type r;
    r.rows.resize(j);
    for (const auto& row : f.rows) r.rows.push_back(uni_.shift(row, i));
    return r;
  }
  value_type pow(value_type f, unsigned e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, f);
      e >>= 1;
      if (e) f = mul(f, f);
    }
    return r;
  }
  value_type monic(const value_type& f) const
    requires Field<R>
  {
    if (f.rows.empty()) return f;
    return scale(base().inv(lc(f)), f);
  }
  E eval(const value_type& f, const E& a, const E& b) const {
    E r = base().zero();
    for (std::size_t j = f.rows.size(); j-- > 0;) r = base().add(base().mul(r, b), uni_.eval(f.rows[j], a));
    return r;
  }

  bool operator==(const BiPolyRing& o) const { return uni_ == o.uni_; }

 private:
  UniPolyRing<R> uni_;
};

/// Coefficient-wise image of f under fn, trimmed in the target ring.
template <CoefficientRing A, CoefficientRing B, class Fn>
UniPoly<B> map_coeffs(const UniPolyRing<B>& target, const UniPoly<A>& f, Fn&& fn) {
  std::vector<typename B::value_type> c;
  c.reserve(f.c.size());
  for (const auto& a : f.c) c.push_back(fn(a));
  return target.make(std::move(c));
}

template <CoefficientRing A, CoefficientRing B, class Fn>
BiPoly<B> map_coeffs(const BiPolyRing<B>& target, const BiPoly<A>& f, Fn&& fn) {
  std::vector<UniPoly<B>> rows;
  rows.reserve(f.rows.size());
  for (const auto& r : f.rows) rows.push_back(map_coeffs(target.uni(), r, fn));
  return target.from_rows(std::move(rows));
}

/// Image of an integer polynomial in any ring (via from_integer).
template <CoefficientRing B>
BiPoly<B> reduce(const BiPolyRing<B>& target, const BiPoly<IntegerRing>& f) {
  return map_coeffs(target, f, [&](const Integer& z) { return target.base().from_integer(z); });
}

/// Coefficients of f reduced into [0, m).
inline BiPoly<ResidueRing> reduce_mod(const BiPoly<IntegerRing>& f, const Integer& m) {
  return reduce(BiPolyRing<ResidueRing>(ResidueRing(m)), f);
}

/// The unique preimage with coefficients in [0, m).
inline BiPoly<IntegerRing> canonical_lift(const BiPoly<ResidueRing>& f) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  return map_coeffs(zxy, f, [](const Integer& a) { return a; });
}

inline BiPoly<IntegerRing> canonical_lift(const BiPoly<PrimeField>& f) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  return map_coeffs(zxy, f, [](std::uint64_t a) { return PrimeField::from_u64(a); });
}

/// Image of a rational polynomial in F_p; DomainError when p divides a
/// denominator.
inline BiPoly<PrimeField> reduce_rational(const BiPolyRing<PrimeField>& target, const BiPoly<RationalField>& f) {
  const PrimeField& fp = target.base();
  return map_coeffs(target, f, [&](const Rational& q) {
    auto den = fp.from_integer(q.get_den());
    if (den == 0) throw DomainError("denominator " + q.get_den().get_str() + " vanishes modulo p");
    return fp.mul(fp.from_integer(q.get_num()), fp.inv(den));
  });
}

inline BiPoly<RationalField> to_rational(const BiPoly<IntegerRing>& f) {
  BiPolyRing<RationalField> qxy{RationalField{}};
  return map_coeffs(qxy, f, [](const Integer& z) { return Rational(z); });
}

/// Maximum height of the nonzero coefficients.
template <CoefficientRing R>
  requires std::same_as<R, IntegerRing> || std::same_as<R, RationalField>
double height(const BiPoly<R>& f) {
  double h = -1;
  bool any = false;
  for (const auto& row : f.rows)
    for (const auto& a : row.c)
      if (sgn(a) != 0) {
        h = std::max(h, height(a));
        any = true;
      }
  if (!any) throw DomainError("height of the zero polynomial");
  return h;
}

}  // namespace bgb
