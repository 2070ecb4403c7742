#pragma once

/**
 * @file normal_forms.hpp
 * @brief Hermite normal form over K[x] and Howell normal form over K[x]/x^k.
 *
 * Both forms use column operations and are lower echelon: the first nonzero
 * entry of a nonzero column is its pivot, pivot rows strictly increase from
 * left to right, and zero columns come last.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bgb/matrix.hpp"
#include "bgb/poly.hpp"

namespace bgb {

template <Field F>
struct HermiteNF {
  PolyMatrix<F> H;
  std::vector<std::size_t> pivot_rows;  // j_1 < ... < j_r, one per nonzero column

  std::size_t rank() const { return pivot_rows.size(); }
};

namespace detail {

template <class Ring>
void axpy_column(const Ring& ring, Matrix<typename Ring::value_type>& m, std::size_t dst,
                 const typename Ring::value_type& q, std::size_t src, std::size_t from_row = 0) {
  // col_dst -= q * col_src
  if (ring.is_zero(q)) return;
  for (std::size_t i = from_row; i < m.rows(); ++i) {
    if (ring.is_zero(m(i, src))) continue;
    m(i, dst) = ring.sub(m(i, dst), ring.mul(q, m(i, src)));
  }
}

}  // namespace detail

/// Hermite normal form by column elimination: repeated Euclidean division on
/// the current row until a single nonzero entry (the gcd) remains, then
/// monic normalization and reduction of the entries to its left.
template <Field F>
HermiteNF<F> hermite_form(const F& field, PolyMatrix<F> M) {
  UniPolyRing<F> kx(field);
  HermiteNF<F> out;
  std::size_t r = 0;
  for (std::size_t row = 0; row < M.rows() && r < M.cols(); ++row) {
    for (;;) {
      // Smallest-degree nonzero entry among the active columns.
      std::optional<std::size_t> best;
      for (std::size_t c = r; c < M.cols(); ++c)
        if (!M(row, c).is_zero() && (!best || kx.degree(M(row, c)) < kx.degree(M(row, *best)))) best = c;
      if (!best) break;
      M.swap_columns(r, *best);
      bool others = false;
      for (std::size_t c = r + 1; c < M.cols(); ++c) {
        if (M(row, c).is_zero()) continue;
        auto q = kx.divrem(M(row, c), M(row, r)).first;
        detail::axpy_column(kx, M, c, q, r, row);
        if (!M(row, c).is_zero()) others = true;
      }
      if (!others) break;
    }
    if (M(row, r).is_zero()) continue;
    const auto inv = field.inv(kx.lc(M(row, r)));
    for (std::size_t i = row; i < M.rows(); ++i) M(i, r) = kx.scale(inv, M(i, r));
    for (std::size_t c = 0; c < r; ++c) {
      if (kx.degree(M(row, c)) < kx.degree(M(row, r))) continue;
      auto q = kx.divrem(M(row, c), M(row, r)).first;
      detail::axpy_column(kx, M, c, q, r, row);
    }
    out.pivot_rows.push_back(row);
    ++r;
  }
  out.H = std::move(M);
  return out;
}

/// Checks the Hermite axioms: nonzero columns first, strictly increasing
/// pivot rows, monic pivots, entries left of a pivot of smaller degree.
template <Field F>
bool verify_hermite(const F& field, const PolyMatrix<F>& H) {
  UniPolyRing<F> kx(field);
  std::vector<std::size_t> piv;
  bool seen_zero = false;
  for (std::size_t c = 0; c < H.cols(); ++c) {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < H.rows(); ++i)
      if (!H(i, c).is_zero()) {
        p = i;
        break;
      }
    if (!p) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (!piv.empty() && *p <= piv.back()) return false;
    if (!field.eq(kx.lc(H(*p, c)), field.one())) return false;
    for (std::size_t k = 0; k < c; ++k)
      if (kx.degree(H(*p, k)) >= kx.degree(H(*p, c))) return false;
    piv.push_back(*p);
  }
  return true;
}

/// Membership of v in the K[x]-column span of a Hermite form, by
/// back-substitution on the pivots.
template <Field F>
bool in_hermite_span(const F& field, const HermiteNF<F>& h, std::vector<UniPoly<F>> v) {
  UniPolyRing<F> kx(field);
  std::size_t col = 0;
  for (std::size_t row = 0; row < v.size(); ++row) {
    if (col < h.pivot_rows.size() && h.pivot_rows[col] == row) {
      auto [q, rem] = kx.divrem(v[row], h.H(row, col));
      if (!rem.is_zero()) return false;
      for (std::size_t i = row; i < v.size(); ++i) v[i] = kx.sub(v[i], kx.mul(q, h.H(i, col)));
      ++col;
    } else if (!v[row].is_zero()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Howell form over A = K[x]/x^k

template <Field F>
struct HowellNF {
  PolyMatrix<F> B;                      // entries of degree < k
  std::vector<std::size_t> pivot_rows;  // j_1 < ... < j_r
  std::vector<std::size_t> exponents;   // pivot i equals x^(c_i)
  std::size_t k = 0;

  std::size_t rank() const { return pivot_rows.size(); }
};

/// Arithmetic helpers in K[x]/x^k on top of UniPolyRing.
template <Field F>
class TruncatedPolys {
 public:
  TruncatedPolys(const F& field, std::size_t k) : kx_(field), k_(k) {}
  const UniPolyRing<F>& kx() const { return kx_; }
  std::size_t k() const { return k_; }

  UniPoly<F> reduce(const UniPoly<F>& a) const { return kx_.truncate(a, k_); }
  UniPoly<F> mul(const UniPoly<F>& a, const UniPoly<F>& b) const {
    return kx_.truncate(kx_.mul(kx_.truncate(a, k_), kx_.truncate(b, k_)), k_);
  }
  /// Valuation in A (k for zero).
  std::size_t valuation(const UniPoly<F>& a) const {
    int v = kx_.valuation(a);
    return v < 0 || static_cast<std::size_t>(v) >= k_ ? k_ : static_cast<std::size_t>(v);
  }
  /// Inverse of a unit u (nonzero constant term) as a power series mod x^k.
  UniPoly<F> unit_inverse(const UniPoly<F>& u) const {
    const F& f = kx_.base();
    const auto c0 = kx_.coeff(u, 0);
    if (f.is_zero(c0)) throw DomainError("not a unit in K[x]/x^k");
    const auto inv0 = f.inv(c0);
    std::vector<typename F::value_type> b(k_, f.zero());
    b[0] = inv0;
    for (std::size_t n = 1; n < k_; ++n) {
      auto acc = f.zero();
      for (std::size_t i = 1; i <= n; ++i) acc = f.add(acc, f.mul(kx_.coeff(u, i), b[n - i]));
      b[n] = f.neg(f.mul(acc, inv0));
    }
    return kx_.make(std::move(b));
  }

 private:
  UniPolyRing<F> kx_;
  std::size_t k_;
};

/// Howell normal form of M mod x^k by echelon elimination with annihilator
/// augmentation: after choosing a pivot x^c at some row, x^(k-c) times the
/// pivot column (which vanishes on that row) joins the columns still to be
/// processed. The output has max(rows, cols) columns, zero-padded.
template <Field F>
HowellNF<F> howell_form(const F& field, const PolyMatrix<F>& M, std::size_t k) {
  if (k == 0) throw DomainError("Howell form needs k >= 1");
  TruncatedPolys<F> A(field, k);
  const auto& kx = A.kx();
  const std::size_t n = M.rows();
  using Col = std::vector<UniPoly<F>>;
  auto is_zero_col = [](const Col& c) {
    return std::all_of(c.begin(), c.end(), [](const UniPoly<F>& e) { return e.is_zero(); });
  };

  std::vector<Col> active;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Col c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = A.reduce(M(i, j));
    if (!is_zero_col(c)) active.push_back(std::move(c));
  }

  HowellNF<F> out;
  out.k = k;
  std::vector<Col> pivots;
  for (std::size_t row = 0; row < n && !active.empty(); ++row) {
    std::optional<std::size_t> best;
    std::size_t best_v = k;
    for (std::size_t c = 0; c < active.size(); ++c) {
      std::size_t v = A.valuation(active[c][row]);
      if (v < best_v) {
        best_v = v;
        best = c;
      }
    }
    if (!best) continue;
    Col piv = std::move(active[*best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(*best));
    // Normalize the pivot entry to x^v.
    const auto u_inv = A.unit_inverse(kx.unshift(piv[row], best_v));
    for (std::size_t i = row; i < n; ++i) piv[i] = A.mul(piv[i], u_inv);
    for (auto& c : active) {
      if (c[row].is_zero()) continue;
      const auto q = kx.unshift(c[row], best_v);
      for (std::size_t i = row; i < n; ++i) c[i] = kx.sub(c[i], A.mul(q, piv[i]));
    }
    if (best_v > 0) {
      Col ann(n);
      for (std::size_t i = row; i < n; ++i) ann[i] = A.reduce(kx.shift(piv[i], k - best_v));
      if (!is_zero_col(ann)) active.push_back(std::move(ann));
    }
    active.erase(std::remove_if(active.begin(), active.end(), is_zero_col), active.end());
    pivots.push_back(std::move(piv));
    out.pivot_rows.push_back(row);
    out.exponents.push_back(best_v);
  }

  // Reduce the entries left of each pivot modulo x^(c_i).
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t row = out.pivot_rows[i];
    const std::size_t c = out.exponents[i];
    for (std::size_t l = 0; l < i; ++l) {
      const auto q = kx.unshift(pivots[l][row], c);
      if (q.is_zero()) continue;
      for (std::size_t r = row; r < n; ++r) pivots[l][r] = kx.sub(pivots[l][r], A.mul(q, pivots[i][r]));
    }
  }

  const std::size_t width = std::max(M.cols(), n);
  out.B = PolyMatrix<F>(n, width);
  for (std::size_t j = 0; j < pivots.size(); ++j) out.B.set_column(j, pivots[j]);
  return out;
}

/// Membership of v in the A-span of a matrix in Howell form, by greedy
/// back-substitution (complete because of the Howell span property).
template <Field F>
bool in_howell_span(const F& field, const HowellNF<F>& h, std::vector<UniPoly<F>> v) {
  TruncatedPolys<F> A(field, h.k);
  const auto& kx = A.kx();
  for (auto& e : v) e = A.reduce(e);
  std::size_t col = 0;
  for (std::size_t row = 0; row < v.size(); ++row) {
    if (v[row].is_zero()) {
      if (col < h.rank() && h.pivot_rows[col] == row) ++col;
      continue;
    }
    if (col >= h.rank() || h.pivot_rows[col] != row) return false;
    const std::size_t c = h.exponents[col];
    if (A.valuation(v[row]) < c) return false;
    const auto q = kx.unshift(v[row], c);
    for (std::size_t i = row; i < v.size(); ++i) v[i] = kx.sub(v[i], A.mul(q, h.B(i, col)));
    ++col;
  }
  return true;
}

/// Checks the five Howell properties of B (entries mod x^k) and, when M is
/// given, mutual span containment with M. Property 5 is checked through the
/// equivalent annihilator condition: x^(k-c_i) * column i lies in the span of
/// columns i+1..r.
template <Field F>
bool verify_howell(const F& field, const PolyMatrix<F>& B, std::size_t k, const PolyMatrix<F>* M = nullptr) {
  TruncatedPolys<F> A(field, k);
  const auto& kx = A.kx();
  HowellNF<F> h;
  h.k = k;
  h.B = B;
  bool seen_zero = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < B.cols(); ++c) {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < B.rows(); ++i) {
      if (kx.degree(B(i, c)) >= static_cast<int>(k)) return false;
      if (!B(i, c).is_zero() && !p) p = i;
    }
    if (!p) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;                                          // (1)
    if (!h.pivot_rows.empty() && *p <= h.pivot_rows.back()) return false;  // (2)
    const auto& piv = B(*p, c);
    const int e = kx.degree(piv);
    if (kx.valuation(piv) != e || !field.eq(kx.lc(piv), field.one())) return false;  // (3)
    for (std::size_t l = 0; l < c; ++l)
      if (kx.degree(B(*p, l)) >= e) return false;  // (4)
    h.pivot_rows.push_back(*p);
    h.exponents.push_back(static_cast<std::size_t>(e));
    ++r;
  }
  // (5): each annihilator multiple must reduce to zero against the later columns.
  for (std::size_t i = 0; i < r; ++i) {
    HowellNF<F> tail;
    tail.k = k;
    tail.B = PolyMatrix<F>(B.rows(), r - i - 1);
    for (std::size_t l = i + 1; l < r; ++l)
      for (std::size_t row = 0; row < B.rows(); ++row) tail.B(row, l - i - 1) = B(row, l);
    tail.pivot_rows.assign(h.pivot_rows.begin() + static_cast<std::ptrdiff_t>(i + 1), h.pivot_rows.end());
    tail.exponents.assign(h.exponents.begin() + static_cast<std::ptrdiff_t>(i + 1), h.exponents.end());
    std::vector<UniPoly<F>> ann(B.rows());
    for (std::size_t row = 0; row < B.rows(); ++row) ann[row] = A.reduce(kx.shift(B(row, i), k - h.exponents[i]));
    if (!in_howell_span(field, tail, ann)) return false;
  }
  if (M) {
    for (std::size_t j = 0; j < M->cols(); ++j)
      if (!in_howell_span(field, h, M->column(j))) return false;
    const auto hm = howell_form(field, *M, k);
    for (std::size_t j = 0; j < r; ++j)
      if (!in_howell_span(field, hm, B.column(j))) return false;
  }
  return true;
}

}  // namespace bgb
