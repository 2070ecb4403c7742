#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace bgbtest;

namespace {

const BiPolyRing<RationalField> qxy{RationalField{}};
const BiPolyRing<IntegerRing> zxy{IntegerRing{}};

LexGB<PrimeField> modp_basis(const std::vector<BiPoly<IntegerRing>>& F, std::uint64_t p) {
  const PrimeField fp(p);
  BiPolyRing<PrimeField> ring(fp);
  std::vector<BiPoly<PrimeField>> Fp;
  for (const auto& f : F) Fp.push_back(reduce(ring, f));
  return buchberger(ring, Fp);
}

const std::vector<std::string> kE = {"2*y^2 - x", "x^2 - y"};

}  // namespace

TEST(RationalReconstruction, Examples) {
  EXPECT_EQ(rational_reconstruct(2, 11, 2), (Fraction{2, 1}));
  EXPECT_EQ(rational_reconstruct(81, 11, 2), (Fraction{1, 3}));
  // 2 * 60 = -1 mod 121, and |-1| < 11/2, 2 <= 11.
  EXPECT_EQ(rational_reconstruct(60, 11, 2), (Fraction{-1, 2}));
  EXPECT_FALSE(rational_reconstruct(26, 11, 2).has_value());
  EXPECT_EQ(rational_reconstruct(0, 11, 2), (Fraction{0, 1}));
  EXPECT_EQ(*rational_reconstruct_q(60, 11, 2), Rational(-1, 2));
}

TEST(RationalReconstruction, AgreesWithBoxSearchModEleven4) {
  const long M = 14641;
  for (long a = 0; a < M; ++a) {
    std::optional<Fraction> brute;
    for (long t = 1; t * t <= M && !brute; ++t) {
      if (t % 11 == 0) continue;
      long e = (t * a) % M;
      if (e > M / 2) e -= M;
      if (4 * e * e < M) brute = Fraction{e, t};
    }
    ASSERT_EQ(rational_reconstruct(a, 11, 4), brute) << a;
  }
}

TEST(RationalReconstruction, InvariantsOnLargeModuli) {
  std::mt19937_64 rng(1);
  const Integer p = 1000003;
  for (int i = 0; i < 2000; ++i) {
    const unsigned long k = 1 + i % 8;
    const Integer M = power(p, k);
    const Integer alpha = uniform_integer(rng, M - 1);
    auto f = rational_reconstruct(alpha, p, k);
    if (!f) continue;
    ASSERT_LT(4 * f->eta * f->eta, M);
    ASSERT_LE(f->theta * f->theta, M);
    ASSERT_GT(f->theta, 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), f->theta.get_mpz_t(), p.get_mpz_t());
    ASSERT_EQ(g, 1);
    ASSERT_EQ(Integer(f->theta * alpha - f->eta) % M, 0);
  }
}

TEST(InitLift, ShapeIdealStaircase) {
  auto F = zpolys({"y - x", "x^2"});
  auto s = init_lift(F, 5, modp_basis(F, 5));
  EXPECT_EQ(s.staircase, (std::vector<Monomial>{{1, 0}, {0, 0}}));
  EXPECT_EQ(s.delta, 2u);
  EXPECT_EQ(s.leads.size(), 2u);
  EXPECT_EQ(s.k, 1u);
}

TEST(InitLift, UnitIdealNeedsNoLifting) {
  auto F = zpolys({"y", "y + 1"});
  auto s = init_lift(F, 5, modp_basis(F, 5));
  EXPECT_TRUE(s.unit);
  lift_step(s);
  EXPECT_TRUE(reconstruct_basis(s)->is_unit_ideal());
}

TEST(InitLift, RejectsWrongModularBasis) {
  auto F = zpolys({"y - x", "x^2"});
  const PrimeField fp(5);
  BiPolyRing<PrimeField> ring(fp);
  EXPECT_THROW(init_lift(F, 5, basis(ring, {"y - x", "x^2 - 1"})), UnluckyPrime);
  EXPECT_THROW(init_lift(F, 5, basis(ring, {"y", "x"})), UnluckyPrime);
}

TEST(LiftStep, HalfExample) {
  auto F = zpolys(kE);
  auto G1 = modp_basis(F, 7);
  const PrimeField f7(7);
  BiPolyRing<PrimeField> r7(f7);
  ASSERT_TRUE(G1 == basis(r7, {"y - x^2", "x^4 + 3*x"}));
  auto s = init_lift(F, 7, G1);
  lift_step(s);
  EXPECT_EQ(s.k, 2u);
  auto G2 = lifted_basis(s);
  EXPECT_TRUE(zxy.eq(G2[1], zpoly("x^4 + 24*x")));
  EXPECT_TRUE(zxy.eq(G2[0], zpoly("y + 48*x^2")));
  auto rec = reconstruct_basis(s);
  ASSERT_TRUE(rec.has_value());
  EXPECT_TRUE(*rec == oracle_q(F));
  EXPECT_TRUE(qxy.eq(rec->polys[1], qxy.sub(qpoly("x^4"), qxy.scale(Rational(1, 2), qpoly("x")))));
}

TEST(LiftStep, IntegerBasisIsStable) {
  auto F = zpolys({"y - x", "x^2"});
  auto s = init_lift(F, 5, modp_basis(F, 5));
  for (int i = 0; i < 4; ++i) {
    lift_step(s);
    auto G = lifted_basis(s);
    const Integer pk = s.modulus();
    EXPECT_TRUE(zxy.eq(G[0], zxy.add(zpoly("y"), zxy.scale(pk - 1, zpoly("x")))));
    EXPECT_TRUE(zxy.eq(G[1], zpoly("x^2")));
  }
}

TEST(LiftStep, PrimeTwoIsRejected) {
  // 2 divides the denominator of the basis over Q.
  auto F = zpolys(kE);
  auto G1 = modp_basis(F, 2);
  bool rejected = false;
  try {
    auto s = init_lift(F, 2, G1);
    for (int i = 0; i < 6; ++i) lift_step(s);
    auto rec = reconstruct_basis(s);
    rejected = !rec || !verify_with_witness(*rec, 1000003, modp_basis(F, 1000003));
  } catch (const UnluckyPrime&) {
    rejected = true;
  } catch (const NotZeroDimensional&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

TEST(ReconstructBasis, ExampleAndFailure) {
  auto rec = reconstruct_basis({zpoly("y + 48*x^2"), zpoly("x^4 + 24*x")}, 7, 2);
  ASSERT_TRUE(rec.has_value());
  EXPECT_TRUE(*rec == oracle_q(zpolys(kE)));
  EXPECT_FALSE(reconstruct_basis({zpoly("y + 26*x")}, 11, 2).has_value());
}

TEST(VerifyWithWitness, Cases) {
  auto F = zpolys(kE);
  auto G = oracle_q(F);
  const std::uint64_t p2 = 1000003;
  EXPECT_TRUE(verify_with_witness(G, p2, modp_basis(F, p2)));

  auto bad_den = G;
  bad_den.polys[1] = qxy.add(bad_den.polys[1], qxy.constant(Rational(1, 1000003)));
  EXPECT_FALSE(verify_with_witness(bad_den, p2, modp_basis(F, p2)));

  // A premature reconstruction of a basis with larger coefficients.
  auto H = zpolys({"y^2 - 3*x*y + 5", "x^2 + 7*y - 11"});
  auto s = init_lift(H, 101, modp_basis(H, 101));
  lift_step(s);
  auto early = reconstruct_basis(s);
  auto truth = oracle_q(H);
  if (early && !(*early == truth)) {
    EXPECT_FALSE(verify_with_witness(*early, p2, modp_basis(H, p2)));
  }
  while (s.k < 64) lift_step(s);
  auto late = reconstruct_basis(s);
  ASSERT_TRUE(late.has_value());
  EXPECT_TRUE(*late == truth);
  EXPECT_TRUE(verify_with_witness(*late, p2, modp_basis(H, p2)));
}

TEST(LiftingLaws, NestedPrecisionAndFixedPoint) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<BiPoly<IntegerRing>> F = {random_zpoly(rng, 1 + i % 3, 10), random_zpoly(rng, 1 + (i / 3) % 3, 10)};
    auto truth = oracle_q(F);
    if (truth.is_unit_ideal() || !is_zero_dimensional(qxy, truth)) continue;
    const std::uint64_t p = random_prime_bits(40, rng);
    std::optional<LiftState> s;
    try {
      s = init_lift(F, p, modp_basis(F, p));
    } catch (const UnluckyPrime&) {
      continue;
    }
    auto prev = lifted_basis(*s);
    Integer prev_mod = s->modulus();
    bool done = false;
    while (s->k < 256 && !done) {
      lift_step(*s);
      auto cur = lifted_basis(*s);
      for (std::size_t g = 0; g < cur.size(); ++g)
        ASSERT_TRUE(zxy.eq(canonical_lift(reduce_mod(cur[g], prev_mod)), prev[g])) << i;
      if (auto rec = reconstruct_basis(*s)) {
        for (std::size_t g = 0; g < rec->size(); ++g) {
          // reduce_mod(rec, p^k) = G_k
          ResidueRing zk(s->modulus());
          BiPolyRing<ResidueRing> rk(zk);
          auto image = map_coeffs(rk, rec->polys[g], [&](const Rational& q) {
            return zk.mul(zk.from_integer(q.get_num()), zk.inv(zk.from_integer(q.get_den())));
          });
          ASSERT_TRUE(rk.eq(image, reduce_mod(cur[g], s->modulus())));
        }
        if (*rec == truth) done = true;
      }
      prev = std::move(cur);
      prev_mod = s->modulus();
    }
    ASSERT_TRUE(done) << i;
    ++checked;
  }
  EXPECT_GT(checked, 10);
}
