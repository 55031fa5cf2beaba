#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projgb/certificate.hpp"
#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/homogeneous.hpp"
#include "projgb/linalg.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/staircase.hpp"

namespace projgb {

/// Basis of the cone ideal of a set inside the hyperplane X1 = 0, given the
/// basis of the same set one dimension down (variables X2..X_{n+1}).
inline GroebnerBasis lift_infinite_part(const GroebnerBasis& gb_sub) {
  const std::size_t n = gb_sub.arity + 1;
  if (gb_sub.is_unit()) return GroebnerBasis::unit(n, TermOrder::deglex);
  std::vector<Polynomial> out{Polynomial::variable(n, 0, TermOrder::deglex)};
  for (const auto& g : gb_sub.elements) out.push_back(embed_polynomial(g, TermOrder::deglex));
  detail::sort_by_leading(out, TermOrder::deglex);
  return {n, TermOrder::deglex, std::move(out)};
}

struct MergeStats {
  std::size_t degree_cap = 0;   // cap in force when the result certified
  std::size_t rounds = 0;       // certification attempts
  std::size_t candidates = 0;   // systems solved
};

/// Reduced deglex basis of the intersection of two homogeneous ideals whose
/// zero sets partition `points`.
///
/// Candidates gamma in C0 n C1 are visited by increasing deglex. For each one
/// outside the cones of corners already found, the system
///   f0_gamma + sum c_delta f0_delta = f1_gamma + sum d_eta f1_eta
/// is solved over delta in C0, eta in C1 of the same degree, lex-smaller than
/// gamma and outside the found cones. A solution makes gamma a corner of the
/// intersection with basis element f0_gamma + sum c_delta f0_delta.
inline GroebnerBasis merge(const GroebnerBasis& gb0, const GroebnerBasis& gb1, const PointSet& points,
                           MergeStats* stats = nullptr) {
  if (!points.is_projective()) throw InputError("merge requires a projective point set");
  const std::size_t arity = points.coordinates();
  for (const auto* gb : {&gb0, &gb1}) {
    if (gb->arity != arity) throw InputError("merge: basis arity does not match the points");
    if (gb->order != TermOrder::deglex) throw InputError("merge requires deglex bases");
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    auto vanishes = [&](const GroebnerBasis& gb) {
      for (const auto& g : gb.elements)
        if (!is_zero(g.evaluate(points[p]))) return false;
      return true;
    };
    const bool in0 = vanishes(gb0), in1 = vanishes(gb1);
    if (in0 == in1)
      throw InputError("merge: point " + std::to_string(p) + (in0 ? " lies on both parts" : " lies on neither part"));
  }
  if (gb0.is_unit()) return gb1;
  if (gb1.is_unit()) return gb0;

  const std::size_t s = points.size();
  const Staircase st0 = Staircase::of(gb0), st1 = Staircase::of(gb1);
  std::vector<ExponentVector> corners;
  std::vector<Polynomial> out;
  auto in_found = [&](const ExponentVector& e) {
    return std::any_of(corners.begin(), corners.end(), [&](const ExponentVector& b) { return b.divides(e); });
  };

  MergeStats local;
  std::size_t next_degree = 0;
  std::size_t cap = s + 1;
  constexpr std::size_t max_rounds = 4;
  for (std::size_t round = 1;; ++round) {
    for (; next_degree <= cap; ++next_degree) {
      const auto mons = monomials_of_degree(arity, next_degree, TermOrder::deglex);
      std::optional<DegreeSlice> slice0, slice1;
      for (std::size_t gi = 0; gi < mons.size(); ++gi) {
        const ExponentVector& gamma = mons[gi];
        if (!st0.in_C(gamma) || !st1.in_C(gamma) || in_found(gamma)) continue;
        if (!slice0) slice0.emplace(gb0, next_degree);
        if (!slice1) slice1.emplace(gb1, next_degree);

        // unknowns: c_delta (from slice0) then d_eta (from slice1)
        std::vector<const Polynomial*> cols;
        std::vector<Rational> sign;
        std::vector<std::size_t> from0;
        for (std::size_t k = 0; k < gi; ++k) {
          const ExponentVector& e = mons[k];
          if (in_found(e)) continue;
          if (slice0->in_C(e)) {
            from0.push_back(cols.size());
            cols.push_back(&slice0->canonical(e));
            sign.push_back(1);
          }
          if (slice1->in_C(e)) {
            cols.push_back(&slice1->canonical(e));
            sign.push_back(-1);
          }
        }
        const Polynomial& f0 = slice0->canonical(gamma);
        const Polynomial& f1 = slice1->canonical(gamma);

        std::map<ExponentVector, std::size_t> rows;
        auto collect = [&](const Polynomial& f) {
          for (const auto& t : f.terms()) rows.emplace(t.exponent, 0);
        };
        collect(f0);
        collect(f1);
        for (const auto* c : cols) collect(*c);
        std::size_t idx = 0;
        for (auto& [e, row] : rows) row = idx++;

        Matrix sys(rows.size(), cols.size());
        std::vector<Rational> rhs(rows.size());
        for (const auto& t : f1.terms()) rhs[rows.at(t.exponent)] += t.coefficient;
        for (const auto& t : f0.terms()) rhs[rows.at(t.exponent)] -= t.coefficient;
        for (std::size_t k = 0; k < cols.size(); ++k)
          for (const auto& t : cols[k]->terms()) sys(rows.at(t.exponent), k) = sign[k] * t.coefficient;

        ++local.candidates;
        const auto sol = solve(sys, rhs);
        if (!sol) continue;
        Polynomial f = f0;
        for (const std::size_t k : from0)
          if (!is_zero(sol->x[k])) f += sol->x[k] * *cols[k];
        corners.push_back(gamma);
        out.push_back(std::move(f));
      }
    }
    std::vector<Polynomial> sorted = out;
    detail::sort_by_leading(sorted, TermOrder::deglex);
    GroebnerBasis result{arity, TermOrder::deglex, std::move(sorted)};
    local.degree_cap = cap;
    local.rounds = round;
    if (certify(result, points).pass) {
      if (stats) *stats = local;
      return result;
    }
    if (round == max_rounds)
      throw CertificationError("merge result failed certification up to degree " + std::to_string(cap));
    cap += s;
  }
}

} // namespace projgb
