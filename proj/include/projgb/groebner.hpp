#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/monomial.hpp"
#include "projgb/polynomial.hpp"

namespace projgb {

/// A list of polynomials together with the order in which it is meant to be a
/// Groebner basis. Results from this library are reduced and sorted by
/// increasing leading exponent. An empty element list is the zero ideal.
struct GroebnerBasis {
  std::size_t arity = 0;
  TermOrder order = TermOrder::deglex;
  std::vector<Polynomial> elements;

  static GroebnerBasis unit(std::size_t arity, TermOrder order) {
    return {arity, order, {Polynomial::constant(arity, 1, order)}};
  }

  bool is_unit() const {
    return elements.size() == 1 && elements.front().size() == 1 && elements.front().leading_exponent().is_zero();
  }
  bool is_zero_ideal() const { return elements.empty(); }

  std::vector<ExponentVector> leading_exponents() const {
    std::vector<ExponentVector> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(leading(g, order).exponent);
    return out;
  }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Full reduction of f by `divisors`. The largest reducible term is always
/// reduced next, by the first divisor (in list order) whose leading monomial
/// divides it.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order) {
  std::vector<Polynomial> g;
  std::vector<ExponentVector> lead;
  g.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InputError("normal_form: zero divisor");
    if (d.arity() != f.arity()) throw InputError("normal_form: divisor arity mismatch");
    g.push_back(d.with_order(order));
    lead.push_back(g.back().leading_exponent());
  }
  Polynomial p = f.with_order(order);
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    std::size_t k = 0;
    while (k < g.size() && !lead[k].divides(lt.exponent)) ++k;
    if (k == g.size()) {
      rest.push_back(p.pop_leading());
      continue;
    }
    const Rational c = lt.coefficient / g[k].leading_coefficient();
    p = p.subtract_multiple(c, lt.exponent - lead[k], g[k]);
  }
  return Polynomial::from_terms(f.arity(), order, std::move(rest));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements, gb.order);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order) {
  if (f.is_zero() || g.is_zero()) throw InputError("s_polynomial: zero input");
  const Polynomial a = f.with_order(order);
  const Polynomial b = g.with_order(order);
  const auto& la = a.leading();
  const auto& lb = b.leading();
  const ExponentVector l = lcm(la.exponent, lb.exponent);
  return a.times_term(l - la.exponent, 1 / la.coefficient) - b.times_term(l - lb.exponent, 1 / lb.coefficient);
}

namespace detail {

inline void sort_by_leading(std::vector<Polynomial>& v, TermOrder order) {
  std::sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(order, a.leading_exponent(), b.leading_exponent()) < 0;
  });
}

} // namespace detail

/// Turns a Groebner basis (as a list, any normalization) into the reduced one:
/// drops elements whose leading monomial is divisible by another's, then
/// replaces each tail by its normal form modulo the others and makes it monic.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, TermOrder order) {
  for (auto& p : g) p = p.with_order(order).monic();
  std::erase_if(g, [](const Polynomial& p) { return p.is_zero(); });
  detail::sort_by_leading(g, order);
  std::vector<Polynomial> minimal;
  for (const auto& p : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_exponent().divides(p.leading_exponent());
    });
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail = minimal[i];
    const Term lt = tail.pop_leading();
    reduced.push_back(Polynomial::monomial(lt.exponent, lt.coefficient, order) + normal_form(tail, others, order));
  }
  return reduced;
}

/// Reduced Groebner basis of <gens>. Pairs are processed smallest lcm first;
/// pairs with coprime leading monomials are skipped.
inline GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order) {
  if (gens.empty()) throw InputError("buchberger: empty generator list");
  const std::size_t arity = gens.front().arity();
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (p.arity() != arity) throw InputError("buchberger: generators of different arity");
    if (!p.is_zero()) g.push_back(p.with_order(order).monic());
  }
  if (g.empty()) return {arity, order, {}};

  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = g[i].leading_exponent();
      const auto& b = g[j].leading_exponent();
      if (coprime(a, b)) continue;
      pairs.push_back({i, j, lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      const auto c = compare(order, it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
    }
    const Pair pr = *best;
    pairs.erase(best);
    Polynomial r = normal_form(s_polynomial(g[pr.i], g[pr.j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    if (g.back().leading_exponent().is_zero()) return GroebnerBasis::unit(arity, order);
    add_pairs_for(g.size() - 1);
  }
  auto reduced = reduce_basis(std::move(g), order);
  detail::sort_by_leading(reduced, order);
  return {arity, order, std::move(reduced)};
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order) {
  return buchberger(std::span<const Polynomial>(gens), order);
}

/// Every element monic and no term of any element divisible by the leading
/// monomial of another element. Returns the first violation, if any.
inline std::optional<std::string> reducedness_violation(const GroebnerBasis& gb) {
  const auto leads = gb.leading_exponents();
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Polynomial p = gb.elements[i].with_order(gb.order);
    if (p.leading_coefficient() != 1) return "element " + std::to_string(i) + " is not monic";
    for (const auto& t : p.terms())
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (j != i && leads[j].divides(t.exponent))
          return "term " + t.exponent.to_string() + " of element " + std::to_string(i) +
                 " is divisible by the leading monomial of element " + std::to_string(j);
  }
  return std::nullopt;
}

/// First pair whose S-polynomial does not reduce to zero, if any. All pairs
/// are checked, coprime ones included.
inline std::optional<std::pair<std::size_t, std::size_t>> failing_s_pair(const GroebnerBasis& gb) {
  for (std::size_t j = 0; j < gb.elements.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(gb.elements[i], gb.elements[j], gb.order), gb).is_zero()) return {{i, j}};
  return std::nullopt;
}

} // namespace projgb
