#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support.hpp"

using namespace bgbtest;

TEST(RandomPrime, Examples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto p = random_prime_in(8, 16, rng);
    EXPECT_TRUE(p == 11 || p == 13);
  }
  EXPECT_EQ(random_prime_in(2, 2, rng), Integer(2));
  EXPECT_THROW(random_prime_in(24, 28, rng), DomainError);
  EXPECT_THROW(random_prime_in(10, 9, rng), DomainError);
}

TEST(RandomPrime, LargeIntervals) {
  std::mt19937_64 rng(2);
  const Integer lo = Integer(1) << 100, hi = Integer(1) << 101;
  for (int i = 0; i < 20; ++i) {
    auto p = random_prime_in(lo, hi, rng);
    EXPECT_GE(p, lo);
    EXPECT_LE(p, hi);
    EXPECT_GT(mpz_probab_prime_p(p.get_mpz_t(), 40), 0);
  }
  for (unsigned bits : {8u, 31u, 62u, 64u}) {
    auto p = random_prime_bits(bits, rng);
    EXPECT_EQ(mpz_sizeinbase(Integer(std::to_string(p)).get_mpz_t(), 2), bits);
    EXPECT_TRUE(is_prime_u64(p));
  }
}

TEST(Primality, DeterministicBelow64Bits) {
  // Compare with trial division on a range and with known hard composites.
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d)
      if (n % d == 0) trial = false;
    ASSERT_EQ(is_prime_u64(n), trial) << n;
  }
  EXPECT_FALSE(is_prime_u64(3215031751ULL));         // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime_u64(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(is_prime_u64(18446744073709551615ULL));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(RandomPrime, ChiSquareUniformity) {
  // 25 primes in [100, 200]; 10^4 draws.
  std::mt19937_64 rng(3);
  std::map<long, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) counts[random_prime_in(100, 200, rng).get_si()]++;
  ASSERT_EQ(counts.size(), 21u);
  const double expected = static_cast<double>(draws) / 21.0;
  double chi2 = 0;
  for (auto [p, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 37.57);  // 1% critical value, 20 degrees of freedom
}

TEST(RandomPrime, RejectionSamplerUniformity) {
  // Interval wider than the enumeration threshold: rejection sampling path.
  std::mt19937_64 rng(4);
  const Integer lo = 1000000, hi = 1000000 + 20000;
  std::map<int, int> buckets;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) buckets[static_cast<int>(Integer(random_prime_in(lo, hi, rng) - lo).get_si() / 2000)]++;
  // Prime counts per bucket of width 2000.
  std::map<int, int> primes;
  for (Integer n = lo; n <= hi; ++n)
    if (is_prime(n)) primes[static_cast<int>(Integer(n - lo).get_si() / 2000)]++;
  int total = 0;
  for (auto [b, c] : primes) total += c;
  double chi2 = 0;
  for (auto [b, c] : primes) {
    const double e = static_cast<double>(draws) * c / total;
    chi2 += (buckets[b] - e) * (buckets[b] - e) / e;
  }
  EXPECT_LT(chi2, 23.21);  // 1% critical value, 10 degrees of freedom
}

TEST(UniformInteger, Range) {
  std::mt19937_64 rng(5);
  const Integer hi = (Integer(1) << 130) + 17;
  Integer mx = 0;
  for (int i = 0; i < 1000; ++i) {
    auto v = uniform_integer(rng, hi);
    ASSERT_GE(v, 0);
    ASSERT_LE(v, hi);
    mx = std::max(mx, v);
  }
  EXPECT_GT(mx, Integer(1) << 129);
  for (int i = 0; i < 1000; ++i) {
    auto v = uniform_integer(rng, 5, 7);
    ASSERT_TRUE(v >= 5 && v <= 7);
  }
}
