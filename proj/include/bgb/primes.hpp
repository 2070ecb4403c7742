#pragma once

/**
 * @file primes.hpp
 * @brief Random integers and random primes from an interval.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/rings.hpp"

namespace bgb {

/// Uniform integer in [0, hi] by rejection on random bit strings.
template <class Rng>
Integer uniform_integer(Rng& rng, const Integer& hi) {
  if (hi < 0) throw DomainError("uniform_integer: empty range");
  if (hi == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(hi.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    Integer z = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = rng();
      if (w == 0 && spare) v >>= spare;
      z <<= 64;
      z += PrimeField::from_u64(v);
    }
    if (z <= hi) return z;
  }
}

/// Uniform integer in [lo, hi].
template <class Rng>
Integer uniform_integer(Rng& rng, const Integer& lo, const Integer& hi) {
  if (hi < lo) throw DomainError("uniform_integer: empty range");
  return lo + uniform_integer(rng, Integer(hi - lo));
}

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 2^64.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool fits_u64(const Integer& z) { return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Integer& z) {
  if (!fits_u64(z)) throw DomainError("integer does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
  return v;
}

/// Primality: exact below 2^64, otherwise Miller-Rabin with error at most
/// 2^-(P+8).
inline bool is_prime(const Integer& n, int P = 20) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  const int rounds = (P + 8 + 1) / 2;
  return mpz_probab_prime_p(n.get_mpz_t(), rounds) > 0;
}

/// A prime drawn uniformly among the primes of [lo, hi]. Small intervals are
/// enumerated; large ones are sampled by rejection with a bounded number of
/// draws.
template <class Rng>
Integer random_prime_in(const Integer& lo, const Integer& hi, Rng& rng, int P = 20) {
  if (hi < lo) throw DomainError("random_prime_in: empty interval");
  const Integer width = hi - lo;
  if (width <= 4096) {
    std::vector<Integer> primes;
    for (Integer n = lo; n <= hi; ++n)
      if (is_prime(n, P)) primes.push_back(n);
    if (primes.empty()) throw DomainError("random_prime_in: no prime in the interval");
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    return primes[pick(rng)];
  }
  const std::size_t bits = mpz_sizeinbase(hi.get_mpz_t(), 2);
  const std::size_t draws = 64 * bits * bits + 1024;
  for (std::size_t i = 0; i < draws; ++i) {
    Integer n = uniform_integer(rng, lo, hi);
    if (is_prime(n, P)) return n;
  }
  throw DomainError("random_prime_in: no prime found after the draw budget");
}

/// A random prime with exactly `bits` bits (2 <= bits <= 64).
template <class Rng>
std::uint64_t random_prime_bits(unsigned bits, Rng& rng) {
  if (bits < 2 || bits > 64) throw DomainError("prime bit length must lie in [2, 64]");
  const Integer lo = Integer(1) << (bits - 1);
  const Integer hi = (Integer(1) << bits) - 1;
  return to_u64(random_prime_in(lo, hi, rng));
}

}  // namespace bgb
