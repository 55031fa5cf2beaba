#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projgb/affine.hpp"
#include "projgb/groebner.hpp"
#include "projgb/linalg.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/staircase.hpp"

namespace projgb {

/// Dimension of the degree-d part of the homogeneous coordinate ring: the rank
/// of the matrix of all degree-d monomials evaluated at the normalized points.
inline std::size_t hilbert_function(const PointSet& a, std::size_t d) {
  if (!a.is_projective()) throw InputError("hilbert_function requires a projective point set");
  if (a.empty()) return 0;
  const auto mons = monomials_of_degree(a.coordinates(), d);
  Matrix m(a.size(), mons.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < mons.size(); ++c) m(i, c) = evaluate_monomial(mons[c], a[i]);
  return rank(m);
}

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct CertificateReport {
  bool pass = true;
  std::vector<CheckFailure> failures;

  void fail(std::string check, std::string detail) {
    pass = false;
    failures.push_back({std::move(check), std::move(detail)});
  }
  bool failed(const std::string& check) const {
    for (const auto& f : failures)
      if (f.check == check) return true;
    return false;
  }
};

namespace detail {

inline void check_elements(const GroebnerBasis& gb, const PointSet& a, bool homogeneous, CertificateReport& report) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const auto& g = gb.elements[i];
    if (g.arity() != gb.arity) {
      report.fail("arity", "element " + std::to_string(i) + " has the wrong number of variables");
      return;
    }
    if (g.is_zero()) {
      report.fail("monic", "element " + std::to_string(i) + " is zero");
      return;
    }
  }
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (homogeneous && !gb.elements[i].is_homogeneous()) {
      report.fail("homogeneous", "element " + std::to_string(i) + " is not homogeneous");
      break;
    }
  }
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (leading(gb.elements[i], gb.order).coefficient != 1) {
      report.fail("monic", "element " + std::to_string(i) + " is not monic");
      break;
    }
  }
  auto first_nonvanishing = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
      for (std::size_t p = 0; p < a.size(); ++p)
        if (!is_zero(gb.elements[i].evaluate(a[p]))) return {{i, p}};
    return std::nullopt;
  };
  if (auto bad = first_nonvanishing())
    report.fail("vanishing",
                "element " + std::to_string(bad->first) + " does not vanish at point " + std::to_string(bad->second));
  if (auto v = reducedness_violation(gb)) report.fail("autoreduced", *v);
  if (auto pr = failing_s_pair(gb))
    report.fail("s-pairs", "S-polynomial of elements " + std::to_string(pr->first) + " and " +
                               std::to_string(pr->second) + " does not reduce to zero");
}

} // namespace detail

/// Checks that gb is the reduced Groebner basis of the vanishing ideal of a
/// projective point set: elements homogeneous, monic and vanishing on the
/// points; autoreduced; all S-polynomials reduce to zero; and the number of
/// degree-d standard monomials equals the Hilbert function of the points for
/// every d up to one past the largest corner degree, continuing until the
/// count has equaled the number of points twice in a row.
inline CertificateReport certify(const GroebnerBasis& gb, const PointSet& a) {
  CertificateReport report;
  if (!a.is_projective()) throw InputError("certify requires a projective point set");
  if (gb.arity != a.coordinates()) {
    report.fail("arity", "basis has " + std::to_string(gb.arity) + " variables, points have " +
                             std::to_string(a.coordinates()) + " coordinates");
    return report;
  }
  detail::check_elements(gb, a, true, report);
  if (report.failed("arity") || report.failed("monic")) return report;

  const Staircase st = Staircase::of(gb);
  const std::size_t last_required = st.max_corner_degree() + 1;
  std::size_t streak = 0;
  for (std::size_t d = 0;; ++d) {
    const std::size_t standard = st.count_standard_of_degree(d);
    const std::size_t hf = hilbert_function(a, d);
    if (standard != hf) {
      report.fail("hilbert", "degree " + std::to_string(d) + ": " + std::to_string(standard) +
                                 " standard monomials, Hilbert function " + std::to_string(hf));
      break;
    }
    streak = standard == a.size() ? streak + 1 : 0;
    if (d >= last_required && streak >= 2) break;
  }
  return report;
}

/// Affine counterpart: vanishing, reducedness, S-pairs, and #D = #points.
inline CertificateReport certify_affine(const GroebnerBasis& gb, const PointSet& a) {
  CertificateReport report;
  if (a.is_projective()) throw InputError("certify_affine requires an affine point set");
  if (gb.arity != a.coordinates()) {
    report.fail("arity", "basis has " + std::to_string(gb.arity) + " variables, points have " +
                             std::to_string(a.coordinates()) + " coordinates");
    return report;
  }
  detail::check_elements(gb, a, false, report);
  if (report.failed("arity") || report.failed("monic")) return report;
  const Staircase st = Staircase::of(gb);
  if (!st.finite_complement()) {
    report.fail("count", "standard monomial set is infinite");
  } else if (const auto d = st.standard_monomials().size(); d != a.size()) {
    report.fail("count", std::to_string(d) + " standard monomials for " + std::to_string(a.size()) + " points");
  }
  return report;
}

} // namespace projgb
