#pragma once

#include <vector>

#include "k2forge/k2/symbols.hpp"

namespace k2forge {

/// Finds functions with divisor m (P) - m (Q) as products of powers of
/// known functions whose divisors are supported on a fixed set of points.
class TorsionSolver {
 public:
  /// The support is `points` together with every place at infinity.
  TorsionSolver(CurveRef c, std::vector<CurvePoint> points);

  /// Registers f after computing its divisor on the support; throws
  /// "support incomplete" if the divisor is not carried by it.
  const Divisor& add(const FnElt& f);

  /// The function of smallest order m obtainable from the known ones, with
  /// divisor m (plus) - m (minus). Throws "no torsion function" when the
  /// class of plus - minus is not in their span.
  TorsionFunction between(const CurvePoint& plus, const CurvePoint& minus) const;

  /// The element {p1, p2, p3} of the torsion construction (its first
  /// symbol).
  K2Element element(const CurvePoint& p1, const CurvePoint& p2, const CurvePoint& p3) const;

  const std::vector<CurvePoint>& support() const { return support_; }

 private:
  CurveRef c_;
  std::vector<CurvePoint> support_;
  std::vector<FnElt> fns_;
  std::vector<Divisor> divs_;
};

}  // namespace k2forge
