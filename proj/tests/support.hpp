#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "projgb.hpp"

namespace projgb::testing {

/// Polynomial literal: poly(2, {{{1, 2}, 1}, {{2, 1}, -1}}) is X1*X2^2 - X1^2*X2.
inline Polynomial poly(std::size_t arity, std::vector<Term> terms, TermOrder order = TermOrder::deglex) {
  return Polynomial::from_terms(arity, order, std::move(terms));
}

inline std::vector<std::string> texts(const GroebnerBasis& gb, std::size_t first_index = 1) {
  std::vector<std::string> out;
  for (const auto& g : gb.elements) out.push_back(to_text(g, first_index));
  return out;
}

/// Random rational p/q with |p| <= 5 and 1 <= q <= 3.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline PointSet random_affine(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  std::set<Point> seen;
  std::vector<Point> pts;
  while (pts.size() < s) {
    Point p(n);
    for (auto& c : p) c = random_rational(rng);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return PointSet::affine(n, std::move(pts));
}

/// Points of P^n with the chart of each point drawn first, so that points at
/// infinity (and deep charts) occur regularly.
inline PointSet random_projective(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  std::uniform_int_distribution<std::size_t> chart(0, n);
  std::bernoulli_distribution finite(0.5);
  std::set<Point> seen;
  std::vector<Point> pts;
  std::size_t attempts = 0;
  while (pts.size() < s) {
    const std::size_t j = finite(rng) ? 0 : chart(rng);
    Point p(n + 1);
    p[j] = 1;
    for (std::size_t c = j + 1; c <= n; ++c) p[c] = random_rational(rng);
    if (seen.insert(p).second) pts.push_back(std::move(p));
    if (++attempts > 10000) break;
  }
  return PointSet::projective(n, std::move(pts));
}

/// Random polynomial with `terms` terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t arity, std::size_t max_degree, std::size_t terms,
                                    TermOrder order) {
  const auto mons = monomials_up_to_degree(arity, max_degree, order);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) out.push_back({mons[pick(rng)], random_rational(rng)});
  return Polynomial::from_terms(arity, order, std::move(out));
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t arity, std::size_t degree, std::size_t terms,
                                     TermOrder order) {
  const auto mons = monomials_of_degree(arity, degree, order);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) out.push_back({mons[pick(rng)], random_rational(rng)});
  return Polynomial::from_terms(arity, order, std::move(out));
}

/// Determinant by cofactor expansion along the first row; exponential, for
/// small matrices only.
inline Rational cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

/// Rank as the size of the largest nonsingular square submatrix, by brute
/// force over row and column subsets.
inline std::size_t brute_force_rank(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    bool found = false;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Matrix sub(k, k);
        for (std::size_t i = 0, ii = 0; i < r; ++i) {
          if (!rs[i]) continue;
          for (std::size_t j = 0, jj = 0; j < c; ++j)
            if (cs[j]) sub(ii, jj++) = m(i, j);
          ++ii;
        }
        if (!is_zero(cofactor_determinant(sub))) found = true;
      } while (!found && std::prev_permutation(cs.begin(), cs.end()));
    } while (!found && std::prev_permutation(rs.begin(), rs.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

/// Counts the standard monomials inside the box {0..bound}^n by brute force.
inline std::size_t count_in_box(const Staircase& s, std::size_t bound, std::size_t degree) {
  std::size_t count = 0;
  for (const auto& e : exponent_box(s.arity(), bound, TermOrder::deglex))
    if (e.degree() == degree && s.in_D(e)) ++count;
  return count;
}

} // namespace projgb::testing
