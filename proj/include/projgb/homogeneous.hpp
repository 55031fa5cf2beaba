#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/staircase.hpp"

namespace projgb {

/// Canonical elements f_gamma of a homogeneous ideal in one degree, taken
/// from its reduced Groebner basis.
///
/// The degree-d part of the ideal is the row space of the products X^mu * g
/// (g in the basis, |mu| + |g| = d). One product per leading exponent already
/// spans it; reducing those rows against each other, smallest pivot first,
/// leaves each row with a single pivot in C and all other entries in D, which
/// is exactly f_gamma. Rows are kept sparse as polynomials.
class DegreeSlice {
public:
  DegreeSlice(const GroebnerBasis& gb, std::size_t degree)
      : degree_(degree), staircase_(Staircase::of(gb)), order_(gb.order) {
    for (const auto& g : gb.elements)
      if (!g.is_homogeneous()) throw InputError("DegreeSlice requires a homogeneous basis");
    const auto leads = gb.leading_exponents();
    for (const auto& gamma : monomials_of_degree(gb.arity, degree, order_)) {
      std::size_t k = 0;
      while (k < leads.size() && !leads[k].divides(gamma)) ++k;
      if (k == leads.size()) continue;
      Polynomial f = gb.elements[k].with_order(order_).monic().times_term(gamma - leads[k]);
      for (;;) {
        const auto& terms = f.terms();
        std::size_t t = 1;
        while (t < terms.size() && !staircase_.in_C(terms[t].exponent)) ++t;
        if (t == terms.size()) break;
        const Rational c = terms[t].coefficient;
        const ExponentVector e = terms[t].exponent;
        f = f.subtract_multiple(c, ExponentVector(gb.arity), canonical_.at(e));
      }
      canonical_.emplace(gamma, std::move(f));
    }
  }

  std::size_t degree() const { return degree_; }
  TermOrder order() const { return order_; }
  const Staircase& staircase() const { return staircase_; }
  bool in_C(const ExponentVector& gamma) const { return canonical_.count(gamma) != 0; }

  const Polynomial& canonical(const ExponentVector& gamma) const {
    auto it = canonical_.find(gamma);
    if (it == canonical_.end()) throw NotInIdealError("exponent " + gamma.to_string() + " is a standard monomial");
    return it->second;
  }

  /// Leading exponents in this degree, in increasing order.
  std::vector<ExponentVector> leading_exponents() const {
    std::vector<ExponentVector> out;
    for (const auto& [e, f] : canonical_) out.push_back(e);
    std::sort(out.begin(), out.end(), OrderLess{order_});
    return out;
  }

private:
  std::size_t degree_;
  Staircase staircase_;
  TermOrder order_;
  std::map<ExponentVector, Polynomial> canonical_;
};

} // namespace projgb
