#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "projgb/errors.hpp"

namespace projgb {

// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize(),
// which every arithmetic operator already performs.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Accepts "p", "-p", "+p", "p/q" with q != 0. Whitespace is rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("malformed rational: \"" + std::string(text) + "\""); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num) || !all_digits(den)) throw fail();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational: \"" + std::string(text) + "\"");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

} // namespace projgb
