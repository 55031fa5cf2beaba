#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/monomial.hpp"

namespace projgb {

enum class StaircaseRegion { in_C, in_D };

/// Monomial ideal given by its minimal generators ("corners"). C is the union of
/// the cones corner + N^arity, D its complement (the standard monomials).
class Staircase {
public:
  Staircase() = default;
  Staircase(std::size_t arity, std::vector<ExponentVector> corners) : arity_(arity) {
    for (const auto& c : corners)
      if (c.size() != arity) throw InputError("staircase corner arity mismatch");
    std::sort(corners.begin(), corners.end(), OrderLess{TermOrder::deglex});
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    // keep only minimal generators
    for (const auto& c : corners) {
      const bool covered = std::any_of(corners_.begin(), corners_.end(), [&](const ExponentVector& b) { return b.divides(c); });
      if (!covered) corners_.push_back(c);
    }
  }

  static Staircase of(const GroebnerBasis& gb) { return Staircase(gb.arity, gb.leading_exponents()); }

  std::size_t arity() const { return arity_; }
  const std::vector<ExponentVector>& corners() const { return corners_; }

  bool in_C(const ExponentVector& g) const {
    if (g.size() != arity_) throw InputError("staircase membership: arity mismatch");
    return std::any_of(corners_.begin(), corners_.end(), [&](const ExponentVector& b) { return b.divides(g); });
  }
  bool in_D(const ExponentVector& g) const { return !in_C(g); }
  StaircaseRegion membership(const ExponentVector& g) const { return in_C(g) ? StaircaseRegion::in_C : StaircaseRegion::in_D; }

  /// Largest corner entry per coordinate (0 where no corner uses the variable).
  ExponentVector corner_bounds() const {
    ExponentVector m(arity_);
    for (const auto& c : corners_)
      for (std::size_t i = 0; i < arity_; ++i) m[i] = std::max(m[i], c[i]);
    return m;
  }

  std::size_t max_corner_degree() const {
    std::size_t d = 0;
    for (const auto& c : corners_) d = std::max(d, c.degree());
    return d;
  }

  /// D is finite iff every variable has a pure power among the corners.
  bool finite_complement() const {
    for (std::size_t i = 0; i < arity_; ++i) {
      const bool pure = std::any_of(corners_.begin(), corners_.end(), [&](const ExponentVector& b) {
        return b[i] > 0 && b.degree() == b[i];
      });
      if (!pure) return false;
    }
    return true;
  }

  std::vector<ExponentVector> standard_monomials_of_degree(std::size_t d, TermOrder order = TermOrder::deglex) const {
    auto all = monomials_of_degree(arity_, d, order);
    std::erase_if(all, [&](const ExponentVector& g) { return in_C(g); });
    return all;
  }

  std::size_t count_standard_of_degree(std::size_t d) const { return standard_monomials_of_degree(d).size(); }

  /// All of D, in increasing `order`; only valid when D is finite.
  std::vector<ExponentVector> standard_monomials(TermOrder order = TermOrder::deglex) const {
    if (!finite_complement()) throw InputError("standard monomial set is infinite");
    std::vector<ExponentVector> out;
    // D lies in the box below the pure-power corners.
    const ExponentVector bound = corner_bounds();
    ExponentVector cur(arity_);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == arity_) {
        if (in_D(cur)) out.push_back(cur);
        return;
      }
      for (ExponentVector::value_type k = 0; k < bound[i]; ++k) {
        cur[i] = k;
        rec(i + 1);
      }
      cur[i] = 0;
    };
    if (!in_C(cur)) rec(0);
    std::sort(out.begin(), out.end(), OrderLess{order});
    return out;
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;

private:
  std::size_t arity_ = 0;
  std::vector<ExponentVector> corners_;
};

inline StaircaseRegion staircase_membership(const Staircase& s, const ExponentVector& g) { return s.membership(g); }

/// An axis base + N e_direction with base[direction] = 0.
struct Axis {
  std::size_t direction;
  ExponentVector base;

  friend bool operator==(const Axis&, const Axis&) = default;
};

struct AxisReport {
  std::vector<Axis> axes;
  std::vector<std::size_t> per_direction;
  std::size_t total = 0;
  // false when D contains a two-dimensional piece, hence infinitely many axes;
  // the listed axes are then only those with bases inside the corner box
  bool bounded = true;
};

/// Enumerates every axis contained in D. The axis base + N e_j lies in D iff
/// no corner b has b_i <= base_i for all i != j.
inline AxisReport axis_census(const Staircase& s) {
  const std::size_t n = s.arity();
  const ExponentVector bound = s.corner_bounds();
  AxisReport report;
  report.per_direction.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector base(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        const bool blocked = std::any_of(s.corners().begin(), s.corners().end(), [&](const ExponentVector& b) {
          for (std::size_t l = 0; l < n; ++l)
            if (l != j && b[l] > base[l]) return false;
          return true;
        });
        if (blocked) return;
        for (std::size_t l = 0; l < n; ++l)
          if (l != j && base[l] == bound[l]) report.bounded = false;
        report.axes.push_back({j, base});
        ++report.per_direction[j];
        ++report.total;
        return;
      }
      if (i == j) {
        base[i] = 0;
        rec(i + 1);
        return;
      }
      for (ExponentVector::value_type k = 0; k <= bound[i]; ++k) {
        base[i] = k;
        rec(i + 1);
      }
      base[i] = 0;
    };
    rec(0);
  }
  return report;
}

} // namespace projgb
