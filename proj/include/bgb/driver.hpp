#pragma once

/**
 * @file driver.hpp
 * @brief End-to-end lex Groebner bases over Q by p-adic lifting.
 *
 * Sample a change of coordinates and two primes, compute the basis modulo
 * both primes in generic coordinates, move back, lift modulo powers of p,
 * reconstruct rationals and accept once the second prime agrees.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bgb/bounds.hpp"
#include "bgb/coords.hpp"
#include "bgb/errors.hpp"
#include "bgb/groebner.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/lifting.hpp"
#include "bgb/oracle.hpp"
#include "bgb/primes.hpp"

namespace bgb {

enum class Mode { Paper, Practical };
enum class Task { FullBasis, PrimaryAtOrigin };

struct DriverConfig {
  int P = 20;
  Mode mode = Mode::Practical;
  unsigned prime_bits = 62;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> forced_p, forced_p2;
  Task task = Task::FullBasis;
  bool emit_stats = false;
  int max_rounds = 16;
};

struct PhaseTimes {
  double modular = 0, lifting = 0, reconstruction = 0, verification = 0, total = 0;
};

struct RunReport {
  LexGB<RationalField> basis;
  std::uint64_t p = 0, p2 = 0;
  std::size_t k = 0;           // final precision exponent
  std::size_t iterations = 0;  // lifting steps of the accepting round
  std::size_t rounds = 0;      // sampling rounds used (1 = first try)
  std::size_t delta = 0;       // dimension of the quotient
  double height = 0;           // max height of the output coefficients
  Coords2x2 gamma;
  DeltaCase kase = DeltaCase::General;
  BoundReport bounds;
  PhaseTimes times;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// A random event the driver repairs by resampling.
struct Resample : Error {
  using Error::Error;
};

inline std::size_t max_total_degree(const std::vector<BiPoly<IntegerRing>>& F) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  std::size_t d = 0;
  for (const auto& f : F)
    if (!f.is_zero()) d = std::max<std::size_t>(d, static_cast<std::size_t>(zxy.total_degree(f)));
  return d;
}

/// Steps 3-7 of the modular pipeline for one prime: the basis of F mod p
/// (or of its <x,y>-primary component) in the original coordinates.
inline LexGB<PrimeField> modular_basis(const std::vector<BiPoly<IntegerRing>>& F, std::uint64_t p,
                                       const Coords2x2& gamma, Task task, std::uint64_t seed) {
  const PrimeField fp(p);
  BiPolyRing<PrimeField> ring(fp);
  const auto g = gamma.in(fp);
  Gamma<PrimeField> ginv;
  try {
    ginv = inverse(fp, g);
  } catch (const DomainError&) {
    throw Resample("coordinate change singular modulo p");
  }
  const std::size_t d = max_total_degree(F);
  // Generator of maximal degree first.
  std::vector<BiPoly<PrimeField>> H;
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  std::size_t lead = 0;
  for (std::size_t i = 0; i < F.size(); ++i)
    if (!F[i].is_zero() && static_cast<std::size_t>(zxy.total_degree(F[i])) == d) {
      lead = i;
      break;
    }
  H.push_back(apply_coords(ring, reduce(ring, F[lead]), g));
  for (std::size_t i = 0; i < F.size(); ++i)
    if (i != lead) H.push_back(apply_coords(ring, reduce(ring, F[i]), g));
  if (fp.is_zero(ring.coeff(H[0], 0, d))) throw Resample("coefficient of y^d vanishes after the change of coordinates");

  std::mt19937_64 rng(seed);
  LexGB<PrimeField> B;
  if (task == Task::FullBasis) {
    B = hermite_groebner_basis(fp, H, d, rng);
  } else {
    B = groebner_basis_at_zero(fp, H, d);
    if (!B.is_unit_ideal()) {
      // A one-to-one projection leaves only the origin: the output must
      // contain a power of y.
      const auto delta = quotient_degree(ring, B);
      const auto yd = ring.monomial(fp.one(), 0, delta);
      if (delta == 0 || !normal_form(ring, yd, B).is_zero())
        throw Resample("projection to the x-line not one-to-one at the origin");
    }
  }
  return change_coordinates_groebner(fp, B, ginv);
}

inline bool zero_dimensional_mod(const std::vector<BiPoly<IntegerRing>>& F, std::uint64_t p) {
  const PrimeField fp(p);
  BiPolyRing<PrimeField> ring(fp);
  std::vector<BiPoly<PrimeField>> Fp;
  for (const auto& f : F) Fp.push_back(reduce(ring, f));
  return is_zero_dimensional(ring, buchberger(ring, Fp));
}

/// Generators used for lifting: F itself, or F + (x^m, y^n) for the
/// primary component, with m and n read off its basis modulo p.
inline std::vector<BiPoly<IntegerRing>> lifting_generators(const std::vector<BiPoly<IntegerRing>>& F,
                                                           const LexGB<PrimeField>& G1, std::uint64_t p,
                                                           Task task) {
  if (task == Task::FullBasis || G1.is_unit_ideal()) return F;
  const PrimeField fp(p);
  BiPolyRing<PrimeField> ring(fp);
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  auto out = F;
  const auto& last = G1.polys.back();
  out.push_back(zxy.monomial(1, static_cast<std::size_t>(ring.deg_x(last)), 0));
  std::size_t n = 1;
  while (!normal_form(ring, ring.monomial(fp.one(), 0, n), G1).is_zero()) ++n;
  out.push_back(zxy.monomial(1, 0, n));
  return out;
}

}  // namespace detail

/// Case of the height and degree bounds that applies to F as given.
inline DeltaCase classify(const std::vector<BiPoly<IntegerRing>>& F) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  if (has_noether_generator(zxy, F)) return DeltaCase::Noether;
  std::size_t t = 0;
  for (const auto& f : F)
    if (!f.is_zero()) ++t;
  return t == 2 ? DeltaCase::TwoGen : DeltaCase::General;
}

/// Maximum height of the input coefficients (0 for an all-zero system).
inline double input_height(const std::vector<BiPoly<IntegerRing>>& F) {
  double h = 0;
  for (const auto& f : F)
    if (!f.is_zero()) h = std::max(h, height(f));
  return h;
}

inline double basis_height(const LexGB<RationalField>& G) {
  double h = 0;
  for (const auto& g : G.polys)
    if (!g.is_zero()) h = std::max(h, height(g));
  return h;
}

inline BoundContext bound_context(const std::vector<BiPoly<IntegerRing>>& F, int P) {
  BiPolyRing<IntegerRing> zxy{IntegerRing{}};
  BoundContext ctx;
  ctx.t = 0;
  ctx.d_y = 0;
  for (const auto& f : F)
    if (!f.is_zero()) {
      ++ctx.t;
      ctx.d_y = std::max<std::size_t>(ctx.d_y, static_cast<std::size_t>(zxy.deg_y(f)));
    }
  ctx.t = std::max<std::size_t>(ctx.t, 2);
  ctx.d = std::max<std::size_t>(detail::max_total_degree(F), 1);
  ctx.h = input_height(F);
  ctx.P = P;
  ctx.kase = classify(F);
  return ctx;
}

/// Lex basis of <F> over Q (or of its <x,y>-primary component).
inline RunReport groebner_basis_main(std::vector<BiPoly<IntegerRing>> F, const DriverConfig& cfg) {
  using namespace detail;
  const auto t_start = Clock::now();
  if (cfg.P < 1) throw DomainError("security parameter must be positive");
  if (cfg.forced_p && cfg.forced_p2 && *cfg.forced_p == *cfg.forced_p2)
    throw DomainError("forced primes must be distinct");
  F.erase(std::remove_if(F.begin(), F.end(), [](const BiPoly<IntegerRing>& f) { return f.is_zero(); }), F.end());

  RunReport rep;
  BiPolyRing<RationalField> qxy{RationalField{}};
  const std::size_t d = max_total_degree(F);
  if (!F.empty() && d == 0) {
    rep.basis = LexGB<RationalField>{{qxy.one()}};
    rep.times.total = seconds_since(t_start);
    return rep;
  }
  if (F.size() < 2) throw NotZeroDimensional("fewer than two nonconstant generators: ideal not zero-dimensional");

  const auto ctx = bound_context(F, cfg.P);
  rep.kase = ctx.kase;
  rep.bounds = prime_interval_bounds(ctx);
  const std::size_t k_cap = precision_cap(rep.bounds.H_bound);
  if (cfg.mode == Mode::Paper && !fits_u64(2 * rep.bounds.B_prime) && !(cfg.forced_p && cfg.forced_p2))
    throw DomainError("paper-mode prime intervals exceed 64 bits; use practical mode");

  std::mt19937_64 rng(cfg.seed ? *cfg.seed : std::random_device{}());
  std::string last_failure = "no attempt";
  for (int round = 1; round <= cfg.max_rounds; ++round) {
    rep.rounds = static_cast<std::size_t>(round);
    const auto gamma = sample_gamma(cfg.P, static_cast<int>(d), rng);
    std::uint64_t p, p2;
    if (cfg.mode == Mode::Paper) {
      p = cfg.forced_p ? *cfg.forced_p : to_u64(random_prime_in(rep.bounds.B + 1, 2 * rep.bounds.B, rng, cfg.P));
      do {
        p2 = cfg.forced_p2 ? *cfg.forced_p2
                           : to_u64(random_prime_in(rep.bounds.B_prime + 1, 2 * rep.bounds.B_prime, rng, cfg.P));
      } while (p2 == p && !cfg.forced_p2);
    } else {
      p = cfg.forced_p ? *cfg.forced_p : random_prime_bits(cfg.prime_bits, rng);
      do {
        p2 = cfg.forced_p2 ? *cfg.forced_p2 : random_prime_bits(cfg.prime_bits, rng);
      } while (p2 == p && !cfg.forced_p2);
    }
    if (p == p2) throw DomainError("the two primes must be distinct");
    rep.p = p;
    rep.p2 = p2;
    rep.gamma = gamma;

    // Modular bases for p and p', computed concurrently.
    const auto t_mod = Clock::now();
    const std::uint64_t s1 = rng(), s2 = rng();
    auto fut1 = std::async(std::launch::async, [&] { return modular_basis(F, p, gamma, cfg.task, s1); });
    auto fut2 = std::async(std::launch::async, [&] { return modular_basis(F, p2, gamma, cfg.task, s2); });
    LexGB<PrimeField> G1, G1p;
    bool ok = true;
    bool not_zero_dim = false;
    for (auto* fut : {&fut1, &fut2}) {
      try {
        (fut == &fut1 ? G1 : G1p) = fut->get();
      } catch (const Resample& e) {
        ok = false;
        last_failure = e.what();
      } catch (const UnluckyPrime& e) {
        ok = false;
        last_failure = e.what();
      } catch (const NotZeroDimensional& e) {
        ok = false;
        not_zero_dim = true;
        last_failure = e.what();
      } catch (const DomainError& e) {
        ok = false;
        last_failure = e.what();
      }
    }
    rep.times.modular += seconds_since(t_mod);
    if (not_zero_dim && !zero_dimensional_mod(F, p) && !zero_dimensional_mod(F, p2))
      throw NotZeroDimensional("ideal is not zero-dimensional (confirmed modulo two primes)");
    if (!ok) continue;

    // Lifting loop.
    try {
      const auto t_lift0 = Clock::now();
      auto state = init_lift(lifting_generators(F, G1, p, cfg.task), p, G1);
      rep.times.lifting += seconds_since(t_lift0);
      std::optional<LexGB<RationalField>> previous;
      rep.iterations = 0;
      while (state.k < k_cap) {
        const auto t_lift = Clock::now();
        lift_step(state);
        ++rep.iterations;
        rep.times.lifting += seconds_since(t_lift);
        const auto t_rec = Clock::now();
        auto rec = reconstruct_basis(state);
        rep.times.reconstruction += seconds_since(t_rec);
        if (!rec) continue;
        const auto t_ver = Clock::now();
        const bool accepted = verify_with_witness(*rec, p2, G1p);
        rep.times.verification += seconds_since(t_ver);
        if (accepted) {
          if (cfg.task == Task::FullBasis && !rec->is_unit_ideal() && !is_zero_dimensional(qxy, *rec))
            throw NotZeroDimensional("reconstructed basis is not zero-dimensional");
          rep.basis = std::move(*rec);
          rep.k = state.k;
          rep.delta = quotient_degree(qxy, rep.basis);
          rep.height = basis_height(rep.basis);
          rep.times.total = seconds_since(t_start);
          return rep;
        }
        // The same reconstruction at two precisions is the p-adic limit; a
        // witness mismatch then means one of the primes is bad.
        if (previous && *previous == *rec) throw UnluckyPrime("stable reconstruction rejected by the witness");
        previous = std::move(rec);
      }
      last_failure = "precision cap reached";
    } catch (const UnluckyPrime& e) {
      last_failure = e.what();
    }
  }
  throw RetriesExhausted("no accepted basis after " + std::to_string(cfg.max_rounds) +
                         " rounds (last failure: " + last_failure + ")");
}

/// Lex basis of the <x,y>-primary component of <F> over Q.
inline RunReport primary_component_main(std::vector<BiPoly<IntegerRing>> F, DriverConfig cfg) {
  cfg.task = Task::PrimaryAtOrigin;
  return groebner_basis_main(std::move(F), cfg);
}

}  // namespace bgb
