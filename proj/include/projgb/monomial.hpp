#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "projgb/errors.hpp"

namespace projgb {

/// Exponent tuple of a monomial. Index 0 is X1, the smallest variable and,
/// in projective rings, the homogenizing one.
class ExponentVector {
public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : e_(arity, 0) {}
  ExponentVector(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExponentVector(std::vector<value_type> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t arity, std::size_t i) {
    ExponentVector v(arity);
    v.e_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<value_type>& entries() const { return e_; }

  std::size_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::size_t{0}); }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
  }

  /// Componentwise <=, i.e. X^this divides X^other.
  bool divides(const ExponentVector& other) const {
    check_arity(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    check_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  /// Requires b to divide a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    if (!b.divides(a)) throw InputError("exponent subtraction would go negative");
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    a.check_arity(b);
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  friend bool coprime(const ExponentVector& a, const ExponentVector& b) {
    a.check_arity(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  /// Drops the first coordinate.
  ExponentVector project() const {
    if (e_.empty()) throw InputError("cannot project an empty exponent vector");
    return ExponentVector(std::vector<value_type>(e_.begin() + 1, e_.end()));
  }

  /// Prepends `zeros` zero coordinates: (0,...,0,this).
  ExponentVector embed(std::size_t zeros = 1) const {
    std::vector<value_type> r(zeros, 0);
    r.insert(r.end(), e_.begin(), e_.end());
    return ExponentVector(std::move(r));
  }

  /// Prepends one coordinate with the given value: (first, this).
  ExponentVector with_front(value_type first) const {
    std::vector<value_type> r{first};
    r.insert(r.end(), e_.begin(), e_.end());
    return ExponentVector(std::move(r));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  // Structural ordering for use as a container key; unrelated to term orders.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  void check_arity(const ExponentVector& o) const {
    if (o.e_.size() != e_.size()) throw InputError("exponent vectors of different length");
  }

private:
  std::vector<value_type> e_;
};

/// Term orders with the variable convention X1 < X2 < ... < X_{n+1}.
enum class TermOrder { lex, deglex, degrevlex };

inline std::string_view to_string(TermOrder o) {
  switch (o) {
  case TermOrder::lex: return "lex";
  case TermOrder::deglex: return "deglex";
  case TermOrder::degrevlex: return "degrevlex";
  }
  return "?";
}

inline TermOrder parse_term_order(std::string_view s) {
  if (s == "lex") return TermOrder::lex;
  if (s == "deglex") return TermOrder::deglex;
  if (s == "degrevlex") return TermOrder::degrevlex;
  throw ParseError("unknown term order: " + std::string(s));
}

namespace detail {

// Lex with the largest variable (last index) compared first.
inline std::strong_ordering lex_from_top(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering compare(TermOrder order, const ExponentVector& a, const ExponentVector& b) {
  a.check_arity(b);
  switch (order) {
  case TermOrder::lex: return detail::lex_from_top(a, b);
  case TermOrder::deglex: {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return detail::lex_from_top(a, b);
  }
  case TermOrder::degrevlex: {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // The smallest variable decides: more of X1 means smaller.
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  }
  return std::strong_ordering::equal;
}

/// Strict-weak "less" functor for a fixed term order.
struct OrderLess {
  TermOrder order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return compare(order, a, b) < 0; }
};

/// All exponent vectors of the given arity and total degree, in increasing `order`.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t arity, std::size_t degree,
                                                       TermOrder order = TermOrder::deglex) {
  std::vector<ExponentVector> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  ExponentVector cur(arity);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == arity) {
      cur[i] = static_cast<ExponentVector::value_type>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      cur[i] = static_cast<ExponentVector::value_type>(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), OrderLess{order});
  return out;
}

/// All exponent vectors of total degree <= max_degree, in increasing `order`.
inline std::vector<ExponentVector> monomials_up_to_degree(std::size_t arity, std::size_t max_degree,
                                                          TermOrder order = TermOrder::deglex) {
  std::vector<ExponentVector> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto slice = monomials_of_degree(arity, d, order);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  std::sort(out.begin(), out.end(), OrderLess{order});
  return out;
}

/// The box {0..bound}^arity, in increasing `order`.
inline std::vector<ExponentVector> exponent_box(std::size_t arity, std::size_t bound, TermOrder order) {
  std::vector<ExponentVector> out;
  ExponentVector cur(arity);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arity) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k <= bound; ++k) {
      cur[i] = static_cast<ExponentVector::value_type>(k);
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), OrderLess{order});
  return out;
}

} // namespace projgb
