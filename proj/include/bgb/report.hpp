#pragma once

/**
 * @file report.hpp
 * @brief Text and JSON rendering of run reports and bound reports.
 */

#include <string>

#include <nlohmann/json.hpp>

#include "bgb/bounds.hpp"
#include "bgb/driver.hpp"
#include "bgb/io.hpp"

namespace bgb {

enum class Format { Text, Json };

inline nlohmann::json bounds_json(const BoundReport& b) {
  return {{"A1", static_cast<double>(b.A1)},
          {"h_prime", static_cast<double>(b.h_prime)},
          {"C_F", static_cast<double>(b.C_F)},
          {"C_H", static_cast<double>(b.C_H)},
          {"A2", static_cast<double>(b.A2)},
          {"A3", static_cast<double>(b.A3)},
          {"B", b.B.get_str()},
          {"B_prime", b.B_prime.get_str()},
          {"b_bound", static_cast<double>(b.b_bound)},
          {"k0_bound", static_cast<double>(b.k0_bound)},
          {"H_bound", static_cast<double>(b.H_bound)}};
}

inline std::string emit_bounds(const BoundContext& ctx, const BoundReport& b, Format fmt) {
  if (fmt == Format::Json) {
    auto j = bounds_json(b);
    j["t"] = ctx.t;
    j["d"] = ctx.d;
    j["d_y"] = ctx.d_y;
    j["h"] = static_cast<double>(ctx.h);
    j["P"] = ctx.P;
    j["case"] = to_string(ctx.kase);
    return j.dump(2) + "\n";
  }
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  line("t", std::to_string(ctx.t));
  line("d", std::to_string(ctx.d));
  line("d_y", std::to_string(ctx.d_y));
  line("h", std::to_string(static_cast<double>(ctx.h)));
  line("P", std::to_string(ctx.P));
  line("case", to_string(ctx.kase));
  const auto j = bounds_json(b);
  for (const auto& [k, v] : j.items()) line(k, v.is_string() ? v.get<std::string>() : v.dump());
  return out;
}

inline std::string emit_report(const RunReport& r, Format fmt, bool stats = false) {
  if (fmt == Format::Json) {
    nlohmann::json j;
    j["basis"] = nlohmann::json::array();
    for (const auto& g : r.basis.polys) j["basis"].push_back(format_polynomial(g));
    j["primes"] = {r.p, r.p2};
    j["precision_k"] = r.k;
    j["iterations"] = r.iterations;
    j["delta"] = r.delta;
    j["height_nats"] = r.height;
    j["bounds"] = bounds_json(r.bounds);
    if (stats) {
      j["rounds"] = r.rounds;
      j["case"] = to_string(r.kase);
      j["gamma"] = {r.gamma.g11.get_str(), r.gamma.g12.get_str(), r.gamma.g21.get_str(), r.gamma.g22.get_str()};
      j["seconds"] = {{"modular", r.times.modular},
                      {"lifting", r.times.lifting},
                      {"reconstruction", r.times.reconstruction},
                      {"verification", r.times.verification},
                      {"total", r.times.total}};
    }
    return j.dump(2) + "\n";
  }
  std::string out = format_basis(r.basis);
  if (stats) {
    out += "# primes: " + std::to_string(r.p) + " " + std::to_string(r.p2) + "\n";
    out += "# precision_k: " + std::to_string(r.k) + "\n";
    out += "# iterations: " + std::to_string(r.iterations) + "\n";
    out += "# rounds: " + std::to_string(r.rounds) + "\n";
    out += "# delta: " + std::to_string(r.delta) + "\n";
    out += "# height_nats: " + std::to_string(r.height) + "\n";
    out += "# seconds: modular " + std::to_string(r.times.modular) + ", lifting " + std::to_string(r.times.lifting) +
           ", reconstruction " + std::to_string(r.times.reconstruction) + ", verification " +
           std::to_string(r.times.verification) + ", total " + std::to_string(r.times.total) + "\n";
  }
  return out;
}

}  // namespace bgb
