#pragma once

#include <cstddef>

#include "projgb/certificate.hpp"
#include "projgb/chart_lift.hpp"
#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/merge.hpp"
#include "projgb/points.hpp"

namespace projgb {

/// Reduced deglex Groebner basis of the vanishing ideal of a projective point
/// set. The points with X1 != 0 are handled by lifting the affine chart; the
/// rest lie in the hyperplane X1 = 0, are solved one dimension down, and the
/// two ideals are merged. Every merge is certified against its points.
inline GroebnerBasis projective_gb(const PointSet& a) {
  if (!a.is_projective()) throw InputError("projective_gb requires a projective point set");
  const std::size_t arity = a.coordinates();
  if (a.empty()) return GroebnerBasis::unit(arity, TermOrder::deglex);
  // a point of P^0 is the whole space
  if (a.dimension() == 0) return {arity, TermOrder::deglex, {}};
  const auto [finite, infinite] = split_hyperplane(a);
  const GroebnerBasis gb1 =
      finite.empty() ? GroebnerBasis::unit(arity, TermOrder::deglex) : lift_affine_chart(finite).basis;
  const GroebnerBasis gb0 = infinite.empty() ? GroebnerBasis::unit(arity, TermOrder::deglex)
                                             : lift_infinite_part(projective_gb(infinite));
  if (gb0.is_unit() || gb1.is_unit()) {
    GroebnerBasis gb = gb0.is_unit() ? gb1 : gb0;
    if (!certify(gb, a).pass) throw CertificationError("projective basis failed certification");
    return gb;
  }
  return merge(gb0, gb1, a);
}

} // namespace projgb
