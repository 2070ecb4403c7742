// Command-line front end: solve, oracle, bounds.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bgb/bgb.hpp"
#include "bgb/report.hpp"

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kPositiveDim = 3, kRetries = 4 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw bgb::DomainError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bgb::Format parse_format(const std::string& s) { return s == "json" ? bgb::Format::Json : bgb::Format::Text; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic Groebner bases of bivariate zero-dimensional ideals over Q"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  bgb::DriverConfig cfg;
  bool primary = false;
  std::string mode = "practical";
  std::uint64_t seed = 0;
  std::uint64_t force_p = 0, force_p2 = 0;

  auto* solve = app.add_subcommand("solve", "Groebner basis over Q by p-adic lifting");
  solve->add_option("file", file, "input system, one polynomial per line ('-' for stdin)")->required();
  solve->add_flag("--primary", primary, "basis of the <x,y>-primary component instead");
  solve->add_option("--security", cfg.P, "security parameter P (failure probability 2^-P)")->check(CLI::PositiveNumber);
  solve->add_option("--mode", mode, "prime selection: paper or practical")->check(CLI::IsMember({"paper", "practical"}));
  solve->add_option("--prime-bits", cfg.prime_bits, "bit length of primes in practical mode")->check(CLI::Range(8, 64));
  auto* seed_opt = solve->add_option("--seed", seed, "random seed");
  auto* fp_opt = solve->add_option("--force-p", force_p, "use this prime for lifting");
  auto* fp2_opt = solve->add_option("--force-p2", force_p2, "use this prime as the witness");
  solve->add_flag("--stats", cfg.emit_stats, "print primes, precision and timings");
  solve->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* oracle = app.add_subcommand("oracle", "reference basis by Buchberger's algorithm over Q");
  oracle->add_option("file", file, "input system")->required();
  oracle->add_flag("--primary", primary, "primary component at the origin");

  auto* bounds = app.add_subcommand("bounds", "height bounds and prime intervals");
  bounds->add_option("file", file, "input system")->required();
  bounds->add_option("--security", cfg.P, "security parameter P")->check(CLI::PositiveNumber);
  bounds->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const auto F = bgb::parse_system(read_file(file));
    if (solve->parsed()) {
      cfg.mode = mode == "paper" ? bgb::Mode::Paper : bgb::Mode::Practical;
      cfg.task = primary ? bgb::Task::PrimaryAtOrigin : bgb::Task::FullBasis;
      if (*seed_opt) cfg.seed = seed;
      if (*fp_opt) {
        if (!bgb::is_prime_u64(force_p)) throw bgb::DomainError("--force-p is not a prime");
        cfg.forced_p = force_p;
      }
      if (*fp2_opt) {
        if (!bgb::is_prime_u64(force_p2)) throw bgb::DomainError("--force-p2 is not a prime");
        cfg.forced_p2 = force_p2;
      }
      const auto report = bgb::groebner_basis_main(F, cfg);
      std::cout << bgb::emit_report(report, parse_format(format), cfg.emit_stats);
    } else if (oracle->parsed()) {
      bgb::BiPolyRing<bgb::RationalField> qxy{bgb::RationalField{}};
      std::vector<bgb::BiPoly<bgb::RationalField>> Fq;
      for (const auto& f : F) Fq.push_back(bgb::to_rational(f));
      int d = 0;
      for (const auto& f : Fq)
        if (!f.is_zero()) d = std::max(d, qxy.total_degree(f));
      const auto G = primary ? bgb::primary_at_origin_oracle(qxy, Fq, std::max(d, 1)) : bgb::buchberger(qxy, Fq);
      std::cout << bgb::format_basis(G);
    } else {
      const auto ctx = bgb::bound_context(F, cfg.P);
      std::cout << bgb::emit_bounds(ctx, bgb::prime_interval_bounds(ctx), parse_format(format));
    }
  } catch (const bgb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const bgb::NotZeroDimensional& e) {
    std::cerr << "not zero-dimensional: " << e.what() << "\n";
    return kPositiveDim;
  } catch (const bgb::RetriesExhausted& e) {
    std::cerr << "retries exhausted: " << e.what() << "\n";
    return kRetries;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOk;
}
