#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/rational.hpp"

namespace projgb {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::size_t require_count(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(std::to_string(v.get<long long>()));
  throw ParseError("rationals must be strings such as \"3/4\", got " + v.dump());
}

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace detail

/// {"space": "affine"|"projective", "dim": n, "points": [["p/q", ...], ...]}
inline PointSet points_from_json(const json& doc) {
  const json& space = detail::require(doc, "space");
  if (!space.is_string()) throw ParseError("field \"space\" must be a string");
  const std::string sp = space.get<std::string>();
  if (sp != "affine" && sp != "projective") throw ParseError("unknown space \"" + sp + "\"");
  const std::size_t dim = detail::require_count(doc, "dim");
  const json& pts = detail::require(doc, "points");
  if (!pts.is_array()) throw ParseError("field \"points\" must be an array");
  std::vector<Point> points;
  for (const auto& p : pts) {
    if (!p.is_array()) throw ParseError("each point must be an array of rationals");
    Point q;
    for (const auto& c : p) q.push_back(detail::rational_from_json(c));
    points.push_back(std::move(q));
  }
  return sp == "affine" ? PointSet::affine(dim, std::move(points)) : PointSet::projective(dim, std::move(points));
}

inline PointSet parse_points(const std::string& text) { return points_from_json(detail::parse_document(text)); }

inline json points_to_json(const PointSet& a) {
  json pts = json::array();
  for (const auto& p : a.points()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(to_string(c));
    pts.push_back(std::move(row));
  }
  return {{"space", a.is_projective() ? "projective" : "affine"}, {"dim", a.dimension()}, {"points", std::move(pts)}};
}

inline std::string serialize_points(const PointSet& a) { return points_to_json(a).dump(2) + "\n"; }

/// [[exponent, "coefficient"], ...] in decreasing deglex order.
inline json polynomial_to_json(const Polynomial& p) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare(TermOrder::deglex, a.exponent, b.exponent) > 0;
  });
  json out = json::array();
  for (const auto& t : terms) out.push_back(json::array({t.exponent.entries(), to_string(t.coefficient)}));
  return out;
}

inline Polynomial polynomial_from_json(const json& j, std::size_t arity, TermOrder order) {
  if (!j.is_array()) throw ParseError("a polynomial must be an array of [exponent, coefficient] pairs");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      throw ParseError("malformed term " + t.dump() + ", expected [[e1, ...], \"coefficient\"]");
    std::vector<ExponentVector::value_type> e;
    for (const auto& x : t[0]) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw ParseError("exponents must be non-negative integers, got " + x.dump());
      e.push_back(x.get<ExponentVector::value_type>());
    }
    if (e.size() != arity)
      throw ParseError("exponent " + t[0].dump() + " has " + std::to_string(e.size()) + " entries, expected " +
                       std::to_string(arity));
    terms.push_back({ExponentVector(std::move(e)), detail::rational_from_json(t[1])});
  }
  return Polynomial::from_terms(arity, order, std::move(terms));
}

/// A point set together with a basis of its vanishing ideal. The JSON form
/// extends the point document with "order", "variables" and "basis".
struct BasisDocument {
  PointSet points;
  GroebnerBasis basis;
};

inline json basis_document_to_json(const BasisDocument& doc) {
  json out = points_to_json(doc.points);
  out["order"] = std::string(to_string(doc.basis.order));
  out["variables"] = doc.basis.arity;
  json elems = json::array();
  for (const auto& g : doc.basis.elements) elems.push_back(polynomial_to_json(g));
  out["basis"] = std::move(elems);
  return out;
}

inline std::string serialize_basis_document(const BasisDocument& doc) {
  return basis_document_to_json(doc).dump(2) + "\n";
}

inline BasisDocument basis_document_from_json(const json& j) {
  BasisDocument doc;
  doc.points = points_from_json(j);
  const json& order = detail::require(j, "order");
  if (!order.is_string()) throw ParseError("field \"order\" must be a string");
  try {
    doc.basis.order = parse_term_order(order.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  doc.basis.arity = detail::require_count(j, "variables");
  const json& elems = detail::require(j, "basis");
  if (!elems.is_array()) throw ParseError("field \"basis\" must be an array");
  for (const auto& e : elems) doc.basis.elements.push_back(polynomial_from_json(e, doc.basis.arity, doc.basis.order));
  return doc;
}

inline BasisDocument parse_basis_document(const std::string& text) {
  return basis_document_from_json(detail::parse_document(text));
}

} // namespace projgb
