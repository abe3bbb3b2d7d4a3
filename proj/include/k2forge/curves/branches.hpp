#pragma once

#include <vector>

#include "k2forge/algebra/series.hpp"
#include "k2forge/curves/curve.hpp"

namespace k2forge {

/// A formal branch t -> (x(t), y(t)) of a curve. Branches at infinity have
/// x(t) or y(t) with a pole.
struct Branch {
  CurvePoint point;
  PowerSeries x, y;
  /// Ramification of x - x(P) (or of 1/x at infinity) along the branch.
  int ramification = 1;
};

/// Truncation used when none is requested: 2 * (maximal pole order) + 4,
/// or the value of K2FORGE_SERIES_ORDER when set.
int default_series_order(int max_pole_order);

/// All branches of c centred on the line at infinity, computed by rational
/// Newton-Puiseux iteration. `order` is the number of known coefficients of
/// y(t) counted from its leading term; 0 selects the default. Branches over
/// one projective point are numbered lexicographically by their series
/// coefficients. Throws RationalSupportError "non-rational branch" when a
/// branch needs an irrational coefficient.
std::vector<Branch> branches_at_infinity(const PlaneCurve& c, int order = 0);

/// Parametrization of c at a smooth affine rational point with x(t), y(t)
/// known modulo t^order.
Branch local_parametrization(const PlaneCurve& c, const CurvePoint& p, int order);

/// Power series Y(t) with Y(0) = 0 and H(t, Y(t)) = 0 modulo t^order, for
/// H(0, 0) = 0 and H_y(0, 0) != 0.
PowerSeries hensel_lift(const BiPoly& h, int order);

}  // namespace k2forge
