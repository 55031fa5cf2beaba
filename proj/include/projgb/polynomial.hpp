#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/monomial.hpp"
#include "projgb/rational.hpp"

namespace projgb {

struct Term {
  ExponentVector exponent;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept sorted in decreasing order of the
/// polynomial's term order and carry no zero coefficients, so equality of two
/// polynomials with the same order is structural.
class Polynomial {
public:
  explicit Polynomial(std::size_t arity = 0, TermOrder order = TermOrder::deglex) : arity_(arity), order_(order) {}

  static Polynomial from_terms(std::size_t arity, TermOrder order, std::vector<Term> terms) {
    Polynomial p(arity, order);
    for (const auto& t : terms)
      if (t.exponent.size() != arity) throw InputError("term arity does not match polynomial arity");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return compare(order, a.exponent, b.exponent) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent)
        p.terms_.back().coefficient += t.coefficient;
      else
        p.terms_.push_back(std::move(t));
      if (projgb::is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
    }
    return p;
  }

  static Polynomial monomial(ExponentVector e, Rational c = 1, TermOrder order = TermOrder::deglex) {
    Polynomial p(e.size(), order);
    if (!projgb::is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }

  static Polynomial constant(std::size_t arity, Rational c, TermOrder order = TermOrder::deglex) {
    return monomial(ExponentVector(arity), std::move(c), order);
  }

  /// The variable X_{index+1}.
  static Polynomial variable(std::size_t arity, std::size_t index, TermOrder order = TermOrder::deglex) {
    return monomial(ExponentVector::unit(arity, index), 1, order);
  }

  std::size_t arity() const { return arity_; }
  TermOrder order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading() const {
    if (terms_.empty()) throw UndefinedLeadingError();
    return terms_.front();
  }
  const ExponentVector& leading_exponent() const { return leading().exponent; }
  const Rational& leading_coefficient() const { return leading().coefficient; }

  Rational coefficient(const ExponentVector& e) const {
    for (const auto& t : terms_)
      if (t.exponent == e) return t.coefficient;
    return 0;
  }

  /// Maximum total degree of a term; 0 for the zero polynomial.
  std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponent.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = terms_.front().exponent.degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponent.degree() == d; });
  }

  /// Removes and returns the leading term.
  Term pop_leading() {
    if (terms_.empty()) throw UndefinedLeadingError();
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Polynomial with_order(TermOrder order) const {
    if (order == order_) return *this;
    Polynomial p(arity_, order);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return compare(order, a.exponent, b.exponent) > 0; });
    return p;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    const Rational inv = 1 / leading_coefficient();
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient *= inv;
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, -1); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (projgb::is_zero(c)) return Polynomial(p.arity_, p.order_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }

  /// c * X^e * p. Multiplying by a monomial preserves the term ordering.
  Polynomial times_term(const ExponentVector& e, const Rational& c = 1) const {
    if (e.size() != arity_) throw InputError("monomial arity does not match polynomial arity");
    Polynomial r(arity_, order_);
    if (projgb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exponent + e, t.coefficient * c});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.arity_, a.order_);
    for (const auto& t : b.terms_) r += a.times_term(t.exponent, t.coefficient);
    return r;
  }

  /// p - c * X^e * q in a single merge pass.
  Polynomial subtract_multiple(const Rational& c, const ExponentVector& e, const Polynomial& q) const {
    return combine(*this, q.times_term(e, c), -1);
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw InputError("evaluation point length does not match ring arity");
    Rational sum = 0;
    Rational term;
    for (const auto& t : terms_) {
      term = t.coefficient;
      for (std::size_t i = 0; i < arity_; ++i) {
        const auto k = t.exponent[i];
        if (k == 0) continue;
        if (projgb::is_zero(point[i])) {
          term = 0;
          break;
        }
        Rational pw;
        mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), k);
        mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), k);
        term *= pw;
      }
      sum += term;
    }
    return sum;
  }

  /// Same arity and the same set of terms, regardless of storage order.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

private:
  void check_compatible(const Polynomial& o) const {
    if (o.arity_ != arity_) throw InputError("polynomials over rings of different arity");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& rhs, int sign) {
    a.check_compatible(rhs);
    if (rhs.order_ != a.order_) return combine(a, rhs.with_order(a.order_), sign);

    Polynomial r(a.arity_, a.order_);
    r.terms_.reserve(a.terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < rhs.terms_.size()) {
      if (j == rhs.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      if (i == a.terms_.size()) {
        Term t = rhs.terms_[j++];
        if (sign < 0) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
        continue;
      }
      const auto c = compare(a.order_, a.terms_[i].exponent, rhs.terms_[j].exponent);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = rhs.terms_[j++];
        if (sign < 0) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
      } else {
        Rational s = sign > 0 ? Rational(a.terms_[i].coefficient + rhs.terms_[j].coefficient)
                              : Rational(a.terms_[i].coefficient - rhs.terms_[j].coefficient);
        if (!projgb::is_zero(s)) r.terms_.push_back({a.terms_[i].exponent, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_;
  TermOrder order_;
  std::vector<Term> terms_;
};

/// Maximal term of p under `order`.
inline Term leading(const Polynomial& p, TermOrder order) {
  if (p.is_zero()) throw UndefinedLeadingError();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (compare(order, t.exponent, best->exponent) > 0) best = &t;
  return *best;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) { return p.evaluate(point); }

/// Multiplies each term of g (a polynomial in X2..X_{n+1}) by the smallest power
/// of a new first variable X1 that lifts it to total degree |g|.
inline Polynomial homogenize(const Polynomial& g, TermOrder order = TermOrder::deglex) {
  if (g.is_zero()) throw InputError("cannot homogenize the zero polynomial");
  const std::size_t d = g.total_degree();
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms())
    terms.push_back({t.exponent.with_front(static_cast<ExponentVector::value_type>(d - t.exponent.degree())),
                     t.coefficient});
  return Polynomial::from_terms(g.arity() + 1, order, std::move(terms));
}

/// Substitutes X1 = 1.
inline Polynomial dehomogenize(const Polynomial& h, TermOrder order) {
  if (h.arity() == 0) throw InputError("cannot dehomogenize a polynomial in zero variables");
  std::vector<Term> terms;
  terms.reserve(h.size());
  for (const auto& t : h.terms()) terms.push_back({t.exponent.project(), t.coefficient});
  return Polynomial::from_terms(h.arity() - 1, order, std::move(terms));
}

inline Polynomial dehomogenize(const Polynomial& h) { return dehomogenize(h, h.order()); }

/// Re-embeds p (in X2..X_{n+1}) into X1..X_{n+1} via alpha -> (0, alpha).
inline Polynomial embed_polynomial(const Polynomial& p, TermOrder order) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.exponent.embed(), t.coefficient});
  return Polynomial::from_terms(p.arity() + 1, order, std::move(terms));
}

} // namespace projgb
