#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "projgb/affine.hpp"
#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/linalg.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/polynomial.hpp"

namespace projgb {

/// One examined candidate alpha of the lifting loop.
struct LiftStep {
  ExponentVector alpha;
  // smallest r for which the degree-|alpha|+r system was solvable, if any
  std::optional<std::size_t> r;
  bool emitted = false;
};

struct LiftResult {
  GroebnerBasis basis;           // deglex, arity n+1
  std::size_t degree_bound = 0;  // m
  std::vector<LiftStep> steps;
};

/// Reduced deglex Groebner basis of the ideal of the lines through the points
/// (1, a) for a in the affine set, built from the lex basis of the affine ideal.
///
/// Every basis element is the homogenization of some
///   g = f_alpha + sum_{beta in Y_r} c_beta f_beta
/// with f_* the lex canonical elements. Candidates alpha in C_lex inside the
/// box {0..m}^n are visited in increasing lex order; for r = 0, 1, ... the
/// coefficients c_beta are solved for such that g has no term of degree above
/// |alpha| + r. Y_r holds the lex-smaller beta in C_lex of degree at most
/// |alpha| + r that cannot make the homogenized term X1^(|g|-|beta|) X^beta
/// divisible by a leading monomial found earlier.
inline LiftResult lift_affine_chart(const PointSet& a1) {
  if (a1.is_projective()) throw InputError("lift_affine_chart requires an affine point set");
  if (a1.empty()) throw InputError("lift_affine_chart requires a nonempty point set");
  const std::size_t n = a1.dimension();
  const AffineIdeal ideal(a1, TermOrder::lex);
  const Staircase& lex_stair = ideal.staircase();

  std::size_t max_standard = 0;
  for (const auto& b : ideal.standard_monomials()) max_standard = std::max(max_standard, b.degree());
  const std::size_t m = 2 + max_standard;

  LiftResult result;
  result.degree_bound = m;

  struct Found {
    ExponentVector alpha;
    std::size_t degree;  // |g'|
    ExponentVector corner;
  };
  std::vector<Found> found;
  std::vector<Polynomial> out;

  // C_lex elements of degree <= m, increasing lex; candidates for beta.
  std::vector<ExponentVector> c_lex = monomials_up_to_degree(n, m, TermOrder::lex);
  std::erase_if(c_lex, [&](const ExponentVector& b) { return lex_stair.in_D(b); });

  std::vector<ExponentVector> candidates = exponent_box(n, m, TermOrder::lex);
  std::erase_if(candidates, [&](const ExponentVector& b) { return lex_stair.in_D(b); });
  std::vector<bool> removed(candidates.size(), false);

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    if (removed[ci]) continue;
    const ExponentVector& alpha = candidates[ci];
    const std::size_t deg_alpha = alpha.degree();
    const Polynomial& f_alpha = ideal.canonical(alpha);
    LiftStep step{alpha, std::nullopt, false};

    for (std::size_t r = 0; deg_alpha + r <= m; ++r) {
      const std::size_t target = deg_alpha + r;
      std::vector<ExponentVector> y;
      for (const auto& beta : c_lex) {
        if (compare(TermOrder::lex, beta, alpha) >= 0) break;
        if (beta.degree() > target) continue;
        const bool allowed = std::all_of(found.begin(), found.end(), [&](const Found& f) {
          if (!f.alpha.divides(beta)) return true;
          return target + f.alpha.degree() < beta.degree() + f.degree;
        });
        if (allowed) y.push_back(beta);
      }

      // one equation per exponent of degree > target occurring in any f
      std::map<ExponentVector, std::size_t> rows;
      auto collect = [&](const Polynomial& f) {
        for (const auto& t : f.terms())
          if (t.exponent.degree() > target) rows.emplace(t.exponent, 0);
      };
      collect(f_alpha);
      for (const auto& beta : y) collect(ideal.canonical(beta));
      std::size_t idx = 0;
      for (auto& [e, row] : rows) row = idx++;

      Matrix sys(rows.size(), y.size());
      std::vector<Rational> rhs(rows.size());
      for (const auto& t : f_alpha.terms())
        if (auto it = rows.find(t.exponent); it != rows.end()) rhs[it->second] = -t.coefficient;
      for (std::size_t k = 0; k < y.size(); ++k)
        for (const auto& t : ideal.canonical(y[k]).terms())
          if (auto it = rows.find(t.exponent); it != rows.end()) sys(it->second, k) = t.coefficient;

      const auto sol = solve(sys, rhs);
      if (!sol) continue;

      step.r = r;
      Polynomial g = f_alpha;
      for (std::size_t k = 0; k < y.size(); ++k)
        if (!is_zero(sol->x[k])) g += sol->x[k] * ideal.canonical(y[k]);
      const ExponentVector corner = alpha.with_front(static_cast<ExponentVector::value_type>(r));
      // (r, alpha) is a leading exponent of the ideal; it is a new corner
      // unless an earlier corner divides it
      const bool covered =
          std::any_of(found.begin(), found.end(), [&](const Found& f) { return f.corner.divides(corner); });
      if (!covered) {
        out.push_back(homogenize(g, TermOrder::deglex));
        found.push_back({alpha, target, corner});
        step.emitted = true;
      }
      if (r == 0) {
        for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj)
          if (alpha.divides(candidates[cj])) removed[cj] = true;
      }
      break;
    }
    result.steps.push_back(std::move(step));
  }
  detail::sort_by_leading(out, TermOrder::deglex);
  result.basis = {n + 1, TermOrder::deglex, std::move(out)};
  return result;
}

} // namespace projgb
