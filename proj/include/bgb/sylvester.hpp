#pragma once

/**
 * @file sylvester.hpp
 * @brief Extended Sylvester matrices of bivariate systems.
 *
 * Rows are labelled y^(d_y+D-1), ..., y, 1 from top to bottom; the columns of
 * block i are labelled y^(D-1), ..., y, 1, so that column j of block i is the
 * coefficient vector of y^(D-1-j) * f_i. The assembled matrix maps cofactor
 * vectors (w_1, ..., w_t) with deg_y(w_i) < D to sum w_i f_i.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bgb/extension_field.hpp"
#include "bgb/matrix.hpp"
#include "bgb/poly.hpp"

namespace bgb {

/// Coefficient vector of f in K[x]^n, top entry = coefficient of y^(n-1).
template <CoefficientRing R>
std::vector<UniPoly<R>> pi_n(const BiPoly<R>& f, std::size_t n) {
  if (f.rows.size() > n) throw DomainError("pi_n: y-degree must be below n");
  std::vector<UniPoly<R>> v(n);
  for (std::size_t i = 0; i < f.rows.size(); ++i) v[n - 1 - i] = f.rows[i];
  return v;
}

template <CoefficientRing R>
BiPoly<R> pi_n_inverse(const BiPolyRing<R>& ring, const std::vector<UniPoly<R>>& v) {
  std::vector<UniPoly<R>> rows(v.rbegin(), v.rend());
  return ring.from_rows(std::move(rows));
}

template <CoefficientRing R>
struct ExtendedSylvester {
  std::size_t t = 0;
  std::size_t d_y = 0;
  std::size_t D = 0;
  PolyMatrix<R> S;  // (d_y + D) x (t * D)

  std::size_t rows() const { return d_y + D; }
};

template <CoefficientRing R>
ExtendedSylvester<R> build_extended_sylvester(const BiPolyRing<R>& ring, const std::vector<BiPoly<R>>& F,
                                              std::size_t D) {
  if (F.size() < 2) throw DomainError("extended Sylvester matrix needs at least two polynomials");
  if (D < 1) throw DomainError("cofactor window D must be positive");
  std::size_t d_y = 0;
  for (const auto& f : F)
    if (!f.is_zero()) d_y = std::max<std::size_t>(d_y, static_cast<std::size_t>(ring.deg_y(f)));
  ExtendedSylvester<R> out{F.size(), d_y, D, PolyMatrix<R>(d_y + D, F.size() * D)};
  const std::size_t n = d_y + D;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < D; ++j) {
      // y^(D-1-j) * f_i: row y^e sits at index n-1-e.
      const std::size_t shift = D - 1 - j;
      for (std::size_t e = 0; e < F[i].rows.size(); ++e) out.S(n - 1 - (e + shift), i * D + j) = F[i].rows[e];
    }
  return out;
}

template <CoefficientRing R>
struct SquareSylvester {
  PolyMatrix<R> matrix;            // (tD) x (tD)
  std::vector<std::size_t> perm;   // perm[k] = column of S placed at position k
  std::size_t top = 0;             // d_y + D
};

namespace detail {

/// Column rank profile of S evaluated at a random point of a large enough
/// field extension of F_p.
template <class Rng>
std::vector<std::size_t> rank_profile_at_random_point(const PrimeField& fp, const PolyMatrix<PrimeField>& S,
                                                      Rng& rng) {
  const std::size_t n = std::max(S.rows(), S.cols());
  const long double need = 4.0L * static_cast<long double>(n) * static_cast<long double>(n);
  const long double p = static_cast<long double>(fp.modulus());
  if (p >= need) {
    std::uniform_int_distribution<std::uint64_t> coin(0, fp.modulus() - 1);
    const std::uint64_t a = coin(rng);
    UniPolyRing<PrimeField> kx(fp);
    Matrix<std::uint64_t> v(S.rows(), S.cols(), 0);
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j) v(i, j) = kx.eval(S(i, j), a);
    return column_rank_profile(fp, v);
  }
  std::size_t e = 2;
  long double q = p * p;
  while (q < need) {
    q *= p;
    ++e;
  }
  ExtensionField gf = ExtensionField::random(fp, e, rng);
  const auto a = gf.random_element(rng);
  Matrix<ExtensionField::value_type> v(S.rows(), S.cols(), gf.zero());
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j) {
      auto acc = gf.zero();
      const auto& c = S(i, j).c;
      for (std::size_t k = c.size(); k-- > 0;) acc = gf.add(gf.mul(acc, a), gf.embed(c[k]));
      v(i, j) = acc;
    }
  return column_rank_profile(gf, v);
}

template <class Rng>
std::vector<std::size_t> rank_profile_at_random_point(const RationalField& qq, const PolyMatrix<RationalField>& S,
                                                      Rng& rng) {
  const std::size_t n = std::max(S.rows(), S.cols());
  std::uniform_int_distribution<long> coin(0, static_cast<long>(4 * n * n + 16));
  const Rational a = coin(rng);
  UniPolyRing<RationalField> kx(qq);
  Matrix<Rational> v(S.rows(), S.cols(), Rational(0));
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j) v(i, j) = kx.eval(S(i, j), a);
  return column_rank_profile(qq, v);
}

}  // namespace detail

/// Permutes the columns of S so that the leading (d_y+D) minor is nonzero and
/// completes it to a square matrix with an identity block. The column rank
/// profile is found by evaluation at a random point (up to 8 attempts).
template <Field F, class Rng>
SquareSylvester<F> squarify(const F& field, const ExtendedSylvester<F>& es, Rng& rng) {
  if (es.D < es.d_y) throw DomainError("squarify requires D >= d_y");
  const std::size_t n = es.rows();
  const std::size_t m = es.S.cols();
  if (m < n) throw DomainError("extended Sylvester matrix has fewer columns than rows");
  std::vector<std::size_t> profile;
  for (int attempt = 0; attempt < 8; ++attempt) {
    profile = detail::rank_profile_at_random_point(field, es.S, rng);
    if (profile.size() == n) break;
  }
  if (profile.size() != n)
    throw NotZeroDimensional("extended Sylvester matrix is rank deficient: ideal not zero-dimensional at this modulus");

  SquareSylvester<F> out;
  out.top = n;
  out.perm = profile;
  std::vector<bool> used(m, false);
  for (auto j : profile) used[j] = true;
  for (std::size_t j = 0; j < m; ++j)
    if (!used[j]) out.perm.push_back(j);

  UniPolyRing<F> kx(field);
  out.matrix = PolyMatrix<F>(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) out.matrix(i, k) = es.S(i, out.perm[k]);
  for (std::size_t i = n; i < m; ++i) out.matrix(i, i) = kx.one();
  return out;
}

}  // namespace bgb
