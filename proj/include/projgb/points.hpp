#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/rational.hpp"

namespace projgb {

enum class Space { affine, projective };

using Point = std::vector<Rational>;

/// A validated finite point set. Affine points have `dimension` coordinates;
/// projective points have dimension+1 coordinates, scaled so that the first
/// nonzero coordinate is 1. Duplicates are rejected, never merged.
class PointSet {
public:
  PointSet() = default;

  static PointSet affine(std::size_t dimension, std::vector<Point> points) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].size() != dimension)
        throw InputError("affine point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                         " coordinates, expected " + std::to_string(dimension));
    return PointSet(Space::affine, dimension, std::move(points));
  }

  static PointSet projective(std::size_t dimension, std::vector<Point> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto& p = points[i];
      if (p.size() != dimension + 1)
        throw InputError("projective point " + std::to_string(i) + " has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(dimension + 1));
      std::size_t k = 0;
      while (k < p.size() && is_zero(p[k])) ++k;
      if (k == p.size()) throw InputError("projective point " + std::to_string(i) + " is the zero vector");
      const Rational inv = 1 / p[k];
      for (std::size_t c = k; c < p.size(); ++c) p[c] *= inv;
    }
    return PointSet(Space::projective, dimension, std::move(points));
  }

  Space space() const { return space_; }
  bool is_projective() const { return space_ == Space::projective; }
  std::size_t dimension() const { return dimension_; }
  /// Number of coordinates per point.
  std::size_t coordinates() const { return is_projective() ? dimension_ + 1 : dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

private:
  PointSet(Space space, std::size_t dimension, std::vector<Point> points)
      : space_(space), dimension_(dimension), points_(std::move(points)) {
    std::map<Point, std::size_t> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto [it, inserted] = seen.emplace(points_[i], i);
      if (!inserted)
        throw InputError("duplicate point: entries " + std::to_string(it->second) + " and " + std::to_string(i) +
                         " coincide");
    }
  }

  Space space_ = Space::affine;
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
};

/// Chart j (0-based) holds the points whose first nonzero coordinate is
/// coordinate j, truncated to the dimension - j coordinates after it.
struct ChartDecomposition {
  std::vector<PointSet> charts;
  // source index in the projective set, per chart point
  std::vector<std::vector<std::size_t>> origin;
};

inline ChartDecomposition split_charts(const PointSet& a) {
  if (!a.is_projective()) throw InputError("split_charts requires a projective point set");
  const std::size_t n = a.dimension();
  std::vector<std::vector<Point>> buckets(n + 1);
  ChartDecomposition out;
  out.origin.resize(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point& p = a[i];
    std::size_t j = 0;
    while (j < p.size() && is_zero(p[j])) ++j;
    if (j == p.size()) throw InputError("split_charts: zero vector among points");
    buckets[j].emplace_back(p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
    out.origin[j].push_back(i);
  }
  for (std::size_t j = 0; j <= n; ++j) out.charts.push_back(PointSet::affine(n - j, std::move(buckets[j])));
  return out;
}

/// Affine part A1 (first coordinate nonzero, truncated) and the hyperplane part
/// (first coordinate zero, first coordinate dropped, as a set in P^{n-1}).
inline std::pair<PointSet, PointSet> split_hyperplane(const PointSet& a) {
  if (!a.is_projective()) throw InputError("split_hyperplane requires a projective point set");
  if (a.dimension() == 0) return {PointSet::affine(0, std::vector<Point>(a.size())), PointSet()};
  std::vector<Point> finite, infinite;
  for (const auto& p : a.points()) {
    if (!is_zero(p[0]))
      finite.emplace_back(p.begin() + 1, p.end());
    else
      infinite.emplace_back(p.begin() + 1, p.end());
  }
  return {PointSet::affine(a.dimension(), std::move(finite)), PointSet::projective(a.dimension() - 1, std::move(infinite))};
}

} // namespace projgb
