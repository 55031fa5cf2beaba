#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/monomial.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/rational.hpp"
#include "projgb/staircase.hpp"

namespace projgb {

/// "X1*X2^2" style monomial; variable i is printed as X{i + first_index}.
inline std::string monomial_text(const ExponentVector& e, std::size_t first_index = 1) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(i + first_index);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

/// Terms in decreasing order of the polynomial's own term order, e.g.
/// "X1*X2^2 - X1^2*X2" or "X2 - 3". Affine polynomials use first_index = 2 so
/// that their variables read as the affine coordinates X2..X{n+1}.
inline std::string to_text(const Polynomial& p, std::size_t first_index = 1) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mon = monomial_text(t.exponent, first_index);
    if (mon.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mon;
    else
      out += to_string(mag) + "*" + mon;
  }
  return out;
}

namespace detail {

// One grid of the staircase: columns are X1 exponents 0..w-1, rows X2
// exponents h-1 down to 0, at a fixed X3 exponent when arity is 3.
inline void render_level(const Staircase& s, std::size_t w, std::size_t h, std::optional<std::size_t> level,
                         const std::set<std::size_t>& rows_free, const std::set<std::size_t>& cols_free,
                         std::string& out) {
  const std::size_t n = s.arity();
  const std::set<ExponentVector> corners(s.corners().begin(), s.corners().end());
  std::string top = "       ";
  for (std::size_t c = 0; c < w; ++c) top += cols_free.count(c) ? " ^" : "  ";
  top.erase(top.find_last_not_of(' ') + 1);
  out += top + "\n";
  for (std::size_t r = h; r-- > 0;) {
    std::string label = "X2^" + std::to_string(r);
    label.resize(6, ' ');
    std::string line = label + "|";
    for (std::size_t c = 0; c < w; ++c) {
      ExponentVector e(n);
      e[0] = static_cast<ExponentVector::value_type>(c);
      e[1] = static_cast<ExponentVector::value_type>(r);
      if (level) e[2] = static_cast<ExponentVector::value_type>(*level);
      const char mark = corners.count(e) ? '@' : s.in_C(e) ? '#' : '.';
      line += ' ';
      line += mark;
    }
    if (rows_free.count(r)) line += " >";
    out += line + "\n";
  }
  std::string axis = "      +";
  for (std::size_t c = 0; c < w; ++c) axis += "--";
  out += axis + "\n";
  std::string cols = "       ";
  for (std::size_t c = 0; c < w; ++c) {
    std::string digit = std::to_string(c % 10);
    cols += " " + digit;
  }
  out += cols + "  (X1)\n";
}

} // namespace detail

/// Text picture of a staircase in two or three variables. Cells: '.' standard
/// monomial, '#' leading monomial, '@' corner. '>' marks a row that continues in
/// D forever along X1, '^' a column that does so along X2. Three variables give
/// one grid per X3 exponent up to one past the largest corner degree.
inline std::string render_staircase(const Staircase& s) {
  const std::size_t n = s.arity();
  if (n < 2 || n > 3)
    throw UnsupportedRenderError("staircase rendering supports 2 or 3 variables, got " + std::to_string(n));
  const ExponentVector bound = s.corner_bounds();
  const std::size_t w = std::max<std::size_t>(bound[0] + 2, 3);
  const std::size_t h = std::max<std::size_t>(bound[1] + 2, 3);
  const AxisReport axes = axis_census(s);
  std::string out;

  auto free_lines = [&](std::optional<std::size_t> level, std::size_t direction) {
    std::set<std::size_t> lines;
    for (const auto& a : axes.axes) {
      if (a.direction != direction) continue;
      if (level && a.base[2] != *level) continue;
      lines.insert(a.base[direction == 0 ? 1 : 0]);
    }
    return lines;
  };

  if (n == 2) {
    detail::render_level(s, w, h, std::nullopt, free_lines(std::nullopt, 0), free_lines(std::nullopt, 1), out);
  } else {
    const std::size_t levels = s.max_corner_degree() + 2;
    for (std::size_t k = 0; k < levels; ++k) {
      out += "X3^" + std::to_string(k) + "\n";
      detail::render_level(s, w, h, k, free_lines(k, 0), free_lines(k, 1), out);
    }
    std::string up;
    for (const auto& a : axes.axes)
      if (a.direction == 2) up += " " + a.base.to_string();
    if (!up.empty()) out += "axes along X3 at" + up + "\n";
  }
  if (!axes.bounded) out += "(D has a two-dimensional part; arrows show axes inside the corner box only)\n";
  return out;
}

} // namespace projgb
