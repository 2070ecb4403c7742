#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace bgbtest;

TEST(BoundB, Values) {
  EXPECT_NEAR(static_cast<double>(bound_B(2, 1, 0)), 5 * std::log(4.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(bound_B(1, 1, 0)), std::log(2.0), 1e-9);
  EXPECT_GE(bound_B(2, 1, 0), 5 * std::log(4.0L));  // rounded upward
  EXPECT_THROW(bound_B(0, 1, 0), DomainError);
  EXPECT_THROW(bound_B(1, 1, -1), DomainError);
}

TEST(BoundB, LinearInHeight) {
  for (std::size_t n : {1u, 2u, 5u, 40u})
    for (std::size_t d : {1u, 3u, 4u})
      for (long double h : {0.5L, 1.0L, 7.25L}) {
        const long double N = static_cast<long double>(n * n * d - n * d + n);
        EXPECT_NEAR(static_cast<double>(bound_B(n, d, 2 * h) - bound_B(n, d, h)), static_cast<double>((N + 1) * h),
                    1e-9 * static_cast<double>(N * h + 1));
      }
}

TEST(BoundC, Values) {
  EXPECT_NEAR(static_cast<double>(bound_C(2, 1, 1, 0)), 7.624618986159399, 1e-9);
  EXPECT_LT(bound_C(2, 2, 5, 1), bound_C(2, 2, 6, 1));
  for (std::size_t t : {2u, 3u})
    for (std::size_t d : {1u, 4u}) EXPECT_GE(bound_C(t, d, 1, 0), std::log(2.0L));
  EXPECT_THROW(bound_C(1, 1, 1, 0), DomainError);
}

TEST(HeightBound, Cases) {
  EXPECT_EQ(height_bound_H(DeltaCase::Noether, 2, 2, 2, 1), bound_C(2, 2, 2, 1));
  EXPECT_EQ(height_bound_H(DeltaCase::TwoGen, 2, 2, 2, 1), bound_C(2, 2, 21, 1));
  EXPECT_NEAR(static_cast<double>(bound_C(2, 2, 2, 1)), 126.47978011525366, 1e-8);
  EXPECT_NEAR(static_cast<double>(bound_C(2, 2, 21, 1)), 31927.124077202272, 1e-6);
  for (std::size_t d = 1; d <= 5; ++d)
    EXPECT_LE(height_bound_H(DeltaCase::Noether, 3, d, d, 2), height_bound_H(DeltaCase::General, 3, d, d, 2));
}

TEST(PrimeIntervals, SmallestContext) {
  BoundContext ctx{2, 1, 1, 0, 1, DeltaCase::Noether};
  auto r = prime_interval_bounds(ctx);
  EXPECT_NEAR(static_cast<double>(r.A1), 2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(r.h_prime), 6.693147180559945, 1e-12);
  EXPECT_NEAR(static_cast<double>(r.C_F), 109820473.1316683, 1e-5);
  EXPECT_NEAR(static_cast<double>(r.C_H), 47.78350206951907, 1e-9);
  EXPECT_NEAR(static_cast<double>(r.A2), 109820527.60831755, 1e-5);
  EXPECT_NEAR(static_cast<double>(r.A3), 6525658143.380315, 1e-3);
  EXPECT_EQ(r.B, Integer("1757128448"));
  EXPECT_EQ(r.B_prime, Integer("106167658736"));
  EXPECT_NEAR(static_cast<double>(r.k0_bound / r.b_bound), 8.0, 1e-15);
}

TEST(PrimeIntervals, Invariants) {
  for (std::size_t t : {2u, 3u})
    for (std::size_t d = 1; d <= 4; ++d)
      for (int P : {1, 5, 20, 40}) {
        BoundContext ctx{t, d, d, 2.3L, P, DeltaCase::General};
        auto r = prime_interval_bounds(ctx);
        const Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(P + 3);
        EXPECT_EQ(r.B, ceil_integer(r.A2) * scale);
        EXPECT_GE(r.B_prime, r.B);
        EXPECT_GE(r.k0_bound, 8 * r.b_bound);
        EXPECT_NEAR(static_cast<double>(r.h_prime),
                    static_cast<double>(2.3L + d * (P + 5 + std::log(static_cast<long double>(d * d * d * d + d)))),
                    1e-9);
        // One more bit of security doubles the scale; A2 grows through h'.
        BoundContext next = ctx;
        next.P = P + 1;
        auto r2 = prime_interval_bounds(next);
        EXPECT_GE(r2.B, 2 * r.B);
        EXPECT_EQ(r2.B, ceil_integer(r2.A2) * scale * 2);
      }
}

TEST(PrimeIntervals, CeilInteger) {
  EXPECT_EQ(ceil_integer(0.5L), Integer(1));
  EXPECT_EQ(ceil_integer(3.0L), Integer(3));
  const long double big = std::ldexp(1.0L, 80);
  EXPECT_GE(ceil_integer(big), Integer(1) << 80);
  EXPECT_LE(ceil_integer(big), (Integer(1) << 80) + 1);
}

TEST(PrecisionCap, PowerOfTwo) {
  EXPECT_EQ(precision_cap(1.0L), 16u);  // ceil(log2 8) + 1 = 4
  EXPECT_EQ(precision_cap(100.0L), 2048u);
  EXPECT_THROW(precision_cap(1e30L), DomainError);
}

TEST(BoundContext, FromSystem) {
  auto ctx = bound_context(zpolys({"2*y^2 - x", "x^2 - y"}), 7);
  EXPECT_EQ(ctx.t, 2u);
  EXPECT_EQ(ctx.d, 2u);
  EXPECT_EQ(ctx.d_y, 2u);
  EXPECT_NEAR(static_cast<double>(ctx.h), std::log(2.0), 1e-12);
  EXPECT_EQ(ctx.kase, DeltaCase::Noether);
  EXPECT_EQ(classify(zpolys({"y^2 - x", "x*y - 1"})), DeltaCase::Noether);
  EXPECT_EQ(classify(zpolys({"x*y^2 - 1", "x*y - 3"})), DeltaCase::TwoGen);
  EXPECT_EQ(classify(zpolys({"x*y^2 - 1", "x*y - 3", "x^2*y"})), DeltaCase::General);
}
