#pragma once

// Exact scalar types. Every computation in the library is carried out over
// arbitrary-precision rationals; no floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mobius {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int rat_sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Canonical string form: "n" when the denominator is 1, else "n/d" with d > 0
// and gcd(n, d) = 1 (cpp_rational keeps values normalized).
inline std::string rat_str(const Rat& r) {
  Int n = rat_num(r);
  Int d = rat_den(r);
  std::string s = n.str();
  if (d != 1) {
    s += "/";
    s += d.str();
  }
  return s;
}

// Parses "n" or "n/d" (optional leading '-' on the numerator). Throws
// std::invalid_argument on malformed input or zero denominator.
inline Rat rat_parse(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) -> Int {
    if (part.empty()) bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad();
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') bad();
    }
    return Int(std::string(part));
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) bad();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

// Exact integer square root test: returns the root when n is a perfect
// square, std::nullopt otherwise. n must be >= 0.
inline std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Rational t > 0 with r = t^2, when one exists (numerator and denominator
// both perfect squares).
inline std::optional<Rat> rational_square_root(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto n = perfect_square_root(rat_num(r));
  auto d = perfect_square_root(rat_den(r));
  if (!n || !d) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace mobius
