#pragma once

/**
 * @file bounds.hpp
 * @brief Height bounds and prime-interval parameters.
 *
 * All logarithms are natural. Values are computed in long double and nudged
 * upwards after each operation, so every result over-approximates the exact
 * real number.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "bgb/errors.hpp"
#include "bgb/groebner.hpp"
#include "bgb/rings.hpp"

namespace bgb {

namespace detail {

inline long double up(long double v) {
  if (!std::isfinite(v)) throw DomainError("bound overflow");
  return std::nextafter(v, std::numeric_limits<long double>::infinity());
}

inline long double log_up(long double v) { return up(std::log(v)); }

}  // namespace detail

/// B(n,d,h) = (N+1) h + N log N + log(n (d+1)), N = n^2 d - n d + n.
inline long double bound_B(std::size_t n, std::size_t d, long double h) {
  using detail::up;
  if (n < 1 || d < 1 || h < 0) throw DomainError("bound_B needs n >= 1, d >= 1, h >= 0");
  const long double nn = n, dd = d;
  const long double N = up(up(up(nn * nn) * dd) - nn * dd + nn);
  return up(up(up((N + 1) * h) + up(N * detail::log_up(N))) + detail::log_up(up(nn * (dd + 1))));
}

/// C(t,d,D,h) = B(tD,d,h) + h + log 2.
inline long double bound_C(std::size_t t, std::size_t d, std::size_t D, long double h) {
  if (t < 2) throw DomainError("bound_C needs t >= 2");
  return detail::up(detail::up(bound_B(t * D, d, h) + h) + detail::log_up(2.0L));
}

/// Bound on H(F) for the given case: C(t, d, Delta_case, h).
inline long double height_bound_H(DeltaCase kase, std::size_t t, std::size_t d, std::size_t d_y, long double h) {
  return bound_C(t, d, delta_bound(kase, d, d_y).value, h);
}

struct BoundContext {
  std::size_t t = 2;
  std::size_t d = 1;
  std::size_t d_y = 1;
  long double h = 0;  // height of the input coefficients
  int P = 20;
  DeltaCase kase = DeltaCase::General;
};

struct BoundReport {
  long double A1 = 0, h_prime = 0, C_F = 0, C_H = 0, A2 = 0, A3 = 0;
  Integer B, B_prime;  // 2^(P+3) ceil(A2) and 2^(P+3) ceil(A2 + A3)
  long double b_bound = 0, k0_bound = 0;
  long double H_bound = 0;  // height_bound_H for ctx.kase
};

/// h' = h + d (P + 5 + log A1), the height after a sampled change of coordinates.
inline long double transformed_height(std::size_t d, long double h, int P) {
  const long double a1 = detail::up(std::pow(static_cast<long double>(d), 4.0L) + d);
  return detail::up(h + detail::up(static_cast<long double>(d) * detail::up(P + 5 + detail::log_up(a1))));
}

inline Integer ceil_integer(long double v) {
  Integer z;
  const long double c = std::ceil(v);
  if (c < 1e18L) {
    z = Integer(std::to_string(static_cast<unsigned long long>(c)));
  } else {
    int e = 0;
    const long double m = std::frexp(c, &e);  // c = m 2^e, m in [0.5, 1)
    const auto mant = static_cast<unsigned long long>(std::ldexp(m, 64));
    z = Integer(std::to_string(mant));
    if (e >= 64)
      z <<= static_cast<mp_bitcnt_t>(e - 64);
    else
      z >>= static_cast<mp_bitcnt_t>(64 - e);
    z += 1;
  }
  return z;
}

inline BoundReport prime_interval_bounds(const BoundContext& ctx) {
  using detail::up;
  if (ctx.P < 1) throw DomainError("security parameter must be positive");
  BoundReport r;
  const long double d = ctx.d;
  r.A1 = up(std::pow(d, 4.0L) + d);
  r.h_prime = transformed_height(ctx.d, ctx.h, ctx.P);
  r.C_F = bound_C(ctx.t, ctx.d, delta_bound(DeltaCase::General, ctx.d, ctx.d_y).value, ctx.h);
  r.C_H = bound_C(ctx.t, ctx.d, delta_bound(DeltaCase::Noether, ctx.d, ctx.d).value, r.h_prime);
  r.A2 = up(up(r.C_F + r.C_H) + r.h_prime);
  r.A3 = up(up(std::log2(up(8 * r.C_F))) * up(up(2 * r.C_F) + detail::log_up(4.0L)));
  const auto shift = static_cast<mp_bitcnt_t>(ctx.P + 3);
  r.B = ceil_integer(r.A2) << shift;
  r.B_prime = ceil_integer(up(r.A2 + r.A3)) << shift;
  r.b_bound = r.C_F;
  r.k0_bound = up(8 * r.b_bound);
  r.H_bound = height_bound_H(ctx.kase, ctx.t, ctx.d, ctx.d_y, ctx.h);
  return r;
}

/// Cap on the lifting precision: 2^(ceil(log2(8 H)) + 1).
inline std::size_t precision_cap(long double H) {
  const long double l = std::ceil(std::log2(std::max<long double>(8 * H, 2)));
  if (l > 60) throw DomainError("precision cap overflow");
  return std::size_t{1} << (static_cast<unsigned>(l) + 1);
}

inline const char* to_string(DeltaCase c) {
  switch (c) {
    case DeltaCase::Noether:
      return "noether";
    case DeltaCase::TwoGen:
      return "two_gen";
    case DeltaCase::General:
      break;
  }
  return "general";
}

}  // namespace bgb
