#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/linalg.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/staircase.hpp"

namespace projgb {

/// x^e evaluated at a point.
inline Rational evaluate_monomial(const ExponentVector& e, std::span<const Rational> point) {
  Rational v = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (is_zero(point[i])) return 0;
    Rational pw;
    mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
    mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
    v *= pw;
  }
  return v;
}

struct BuchbergerMoellerResult {
  GroebnerBasis basis;
  Staircase staircase;
  std::vector<ExponentVector> standard_monomials; // increasing in the order
};

/// Reduced Groebner basis of the vanishing ideal of an affine point set.
///
/// Monomials are visited in increasing order starting from 1. A monomial whose
/// evaluation vector is independent of those of the standard monomials kept so
/// far becomes standard and feeds its successors X_i * m into the queue;
/// otherwise the dependency is a basis element with leading monomial m. Queued
/// monomials that lie above a known leading monomial are skipped.
inline BuchbergerMoellerResult buchberger_moeller(const PointSet& points, TermOrder order) {
  if (points.is_projective()) throw InputError("buchberger_moeller requires an affine point set");
  const std::size_t n = points.dimension();
  const std::size_t s = points.size();

  struct Reducer {
    std::size_t pivot;
    std::vector<Rational> values;  // normalized so values[pivot] == 1
    std::vector<Rational> combo;   // values = sum combo[l] * eval(standard[l])
  };
  std::vector<Reducer> reducers;
  std::vector<ExponentVector> standard;
  std::vector<Polynomial> elements;
  std::vector<ExponentVector> leads;

  std::set<ExponentVector, OrderLess> queue{OrderLess{order}};
  queue.insert(ExponentVector(n));
  while (!queue.empty()) {
    const ExponentVector m = *queue.begin();
    queue.erase(queue.begin());
    if (std::any_of(leads.begin(), leads.end(), [&](const ExponentVector& b) { return b.divides(m); })) continue;

    std::vector<Rational> w(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = evaluate_monomial(m, points[i]);
    // w == eval(m) - sum q[l] * eval(standard[l])
    std::vector<Rational> q(standard.size());
    for (const auto& red : reducers) {
      if (is_zero(w[red.pivot])) continue;
      const Rational f = w[red.pivot];
      for (std::size_t i = 0; i < s; ++i)
        if (!is_zero(red.values[i])) w[i] -= f * red.values[i];
      for (std::size_t l = 0; l < red.combo.size(); ++l)
        if (!is_zero(red.combo[l])) q[l] += f * red.combo[l];
    }
    std::size_t p = 0;
    while (p < s && is_zero(w[p])) ++p;
    if (p == s) {
      std::vector<Term> terms{{m, 1}};
      for (std::size_t l = 0; l < q.size(); ++l)
        if (!is_zero(q[l])) terms.push_back({standard[l], -q[l]});
      elements.push_back(Polynomial::from_terms(n, order, std::move(terms)));
      leads.push_back(m);
      continue;
    }
    const Rational inv = 1 / w[p];
    Reducer red{p, std::move(w), {}};
    for (auto& v : red.values) v *= inv;
    red.combo.resize(standard.size() + 1);
    for (std::size_t l = 0; l < q.size(); ++l) red.combo[l] = -q[l] * inv;
    red.combo[standard.size()] = inv;
    reducers.push_back(std::move(red));
    standard.push_back(m);
    for (std::size_t i = 0; i < n; ++i) queue.insert(m + ExponentVector::unit(n, i));
  }
  detail::sort_by_leading(elements, order);
  GroebnerBasis gb{n, order, std::move(elements)};
  Staircase st = Staircase::of(gb);
  return {std::move(gb), std::move(st), std::move(standard)};
}

/// X^sigma - NF(X^sigma): the unique monic ideal member with leading exponent
/// sigma whose other exponents are all standard.
inline Polynomial canonical_element(const ExponentVector& sigma, const GroebnerBasis& gb) {
  if (sigma.size() != gb.arity) throw InputError("canonical_element: arity mismatch");
  if (Staircase::of(gb).in_D(sigma))
    throw NotInIdealError("exponent " + sigma.to_string() + " is a standard monomial");
  const Polynomial x = Polynomial::monomial(sigma, 1, gb.order);
  return x - normal_form(x, gb);
}

/// Vanishing ideal of an affine point set with its canonical elements.
///
/// Normal forms of monomials are obtained by interpolation: NF(X^sigma) is the
/// unique combination of standard monomials that agrees with X^sigma at every
/// point. This is cheaper than division for high powers and is checked against
/// the division route in the tests.
class AffineIdeal {
public:
  AffineIdeal(PointSet points, TermOrder order) : points_(std::move(points)), order_(order) {
    auto bm = buchberger_moeller(points_, order_);
    basis_ = std::move(bm.basis);
    staircase_ = std::move(bm.staircase);
    standard_ = std::move(bm.standard_monomials);
    const std::size_t s = points_.size();
    Matrix aug(s, 2 * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t l = 0; l < s; ++l) aug(i, l) = evaluate_monomial(standard_[l], points_[i]);
      aug(i, s + i) = 1;
    }
    auto echelon = rref(std::move(aug));
    inverse_ = Matrix(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t l = 0; l < s; ++l) inverse_(i, l) = echelon.reduced(i, s + l);
  }

  const PointSet& points() const { return points_; }
  TermOrder order() const { return order_; }
  std::size_t arity() const { return points_.dimension(); }
  const GroebnerBasis& basis() const { return basis_; }
  const Staircase& staircase() const { return staircase_; }
  const std::vector<ExponentVector>& standard_monomials() const { return standard_; }

  Polynomial remainder(const ExponentVector& sigma) const {
    const std::size_t s = points_.size();
    std::vector<Rational> b(s);
    for (std::size_t i = 0; i < s; ++i) b[i] = evaluate_monomial(sigma, points_[i]);
    const auto c = inverse_.multiply(b);
    std::vector<Term> terms;
    for (std::size_t l = 0; l < s; ++l)
      if (!is_zero(c[l])) terms.push_back({standard_[l], c[l]});
    return Polynomial::from_terms(arity(), order_, std::move(terms));
  }

  /// f_sigma; memoized.
  const Polynomial& canonical(const ExponentVector& sigma) const {
    auto it = cache_.find(sigma);
    if (it != cache_.end()) return it->second;
    if (staircase_.in_D(sigma)) throw NotInIdealError("exponent " + sigma.to_string() + " is a standard monomial");
    Polynomial f = Polynomial::monomial(sigma, 1, order_) - remainder(sigma);
    return cache_.emplace(sigma, std::move(f)).first->second;
  }

private:
  PointSet points_;
  TermOrder order_;
  GroebnerBasis basis_;
  Staircase staircase_;
  std::vector<ExponentVector> standard_;
  Matrix inverse_;
  mutable std::map<ExponentVector, Polynomial> cache_;
};

} // namespace projgb
