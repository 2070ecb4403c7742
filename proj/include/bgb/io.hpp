#pragma once

/**
 * @file io.hpp
 * @brief Parsing of polynomial systems and text formatting of polynomials.
 *
 * Input: one polynomial per line over Z in x and y with + - * ^ and
 * parentheses; '#' starts a comment; blank lines are skipped.
 */

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bgb/errors.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/poly.hpp"

namespace bgb {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  BiPoly<IntegerRing> parse() {
    auto f = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return f;
  }

 private:
  using Poly = BiPoly<IntegerRing>;
  static constexpr unsigned long max_exponent = 4096;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, i_ + 1); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly f = term();
    for (;;) {
      if (accept('+'))
        f = ring_.add(f, term());
      else if (accept('-'))
        f = ring_.sub(f, term());
      else
        return f;
    }
  }

  Poly term() {
    Poly f = unary();
    while (accept('*')) f = ring_.mul(f, unary());
    skip();
    if (i_ < s_.size() && s_[i_] == '/') fail("division is not supported: coefficients must be integers");
    return f;
  }

  Poly unary() {
    if (accept('-')) return ring_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected a non-negative integer exponent");
      const std::string digits(s_.substr(start, i_ - start));
      if (digits.size() > 4 || std::stoul(digits) > max_exponent) fail("exponent too large");
      return ring_.pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return ring_.from_integer(Integer(std::string(s_.substr(start, i_ - start))));
    }
    if (c == 'x' || c == 'y') {
      ++i_;
      return c == 'x' ? ring_.x() : ring_.y();
    }
    if (c == '(') {
      ++i_;
      Poly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == '/') fail("division is not supported: coefficients must be integers");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
  BiPolyRing<IntegerRing> ring_{IntegerRing{}};
};

}  // namespace detail

/// Parses one polynomial; `line` only labels error positions.
inline BiPoly<IntegerRing> parse_polynomial(std::string_view text, std::size_t line = 1) {
  return detail::PolyParser(text, line).parse();
}

/// One polynomial per nonblank, non-comment line.
inline std::vector<BiPoly<IntegerRing>> parse_system(std::string_view text) {
  std::vector<BiPoly<IntegerRing>> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view ln = text.substr(pos, end - pos);
    if (auto hash = ln.find('#'); hash != std::string_view::npos) ln = ln.substr(0, hash);
    bool blank = true;
    for (char c : ln)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_polynomial(ln, line));
    pos = end + 1;
  }
  return out;
}

namespace detail {

inline std::string monomial_string(Monomial m) {
  std::string s;
  if (m.x > 0) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) {
    if (!s.empty()) s += "*";
    s += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  }
  return s;
}

}  // namespace detail

/// Terms in decreasing lex order, e.g. "x^4 - 1/2*x" or "y - x^2".
template <CoefficientRing R>
  requires std::same_as<R, IntegerRing> || std::same_as<R, RationalField>
std::string format_polynomial(const BiPoly<R>& f) {
  BiPolyRing<R> ring{R{}};
  const auto terms = ring.terms(f);
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.c) < 0;
    const typename R::value_type mag = abs(t.c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const std::string mono = detail::monomial_string(t.m);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

template <CoefficientRing R>
  requires std::same_as<R, IntegerRing> || std::same_as<R, RationalField>
std::string format_basis(const LexGB<R>& G) {
  std::string out;
  for (const auto& g : G.polys) out += format_polynomial(g) + "\n";
  return out;
}

}  // namespace bgb
