#pragma once

#include <utility>
#include <vector>

#include "k2forge/curves/curve.hpp"

namespace k2forge {

/// I_P(c1, c2) by Fulton's reduction. Throws "empty intersection at point"
/// if p is not on both curves.
int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2, const CurvePoint& p);

/// Intersection number at the origin of the affine curves F = 0, G = 0
/// (0 when either misses the origin). `bound` guards the Bezout invariant.
int intersection_at_origin(BiPoly f, BiPoly g, int bound);

/// The tangent line at a smooth affine rational point; throws
/// "no unique tangent" at a singular point.
Line tangent_line(const PlaneCurve& c, const CurvePoint& p);

struct IntersectionCycle {
  /// Rational intersection points with their multiplicities: affine points
  /// first, then points at infinity.
  std::vector<std::pair<CurvePoint, int>> points;
  int total = 0;
  int bezout = 0;
  bool complete() const { return total == bezout; }
};

/// All rational intersection points of two curves without common
/// components. complete() is false when some intersection point is not
/// rational.
IntersectionCycle intersect(const PlaneCurve& c1, const PlaneCurve& c2);

}  // namespace k2forge
