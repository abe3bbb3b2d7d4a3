#pragma once

#include <optional>
#include <string>

#include "k2forge/algebra/unipoly.hpp"
#include "k2forge/curves/curve.hpp"

namespace k2forge {

struct SmoothnessReport {
  bool smooth = true;
  /// No singular point with Z != 0.
  bool affine_smooth = true;
  /// A rational singular point, when one exists.
  std::optional<CurvePoint> singular_point;
  /// Otherwise a polynomial whose roots contain a coordinate of a singular
  /// point (x in the affine chart, X/Y on the line at infinity).
  std::optional<UniPoly> eliminant;
  std::string witness;
};

/// Decides smoothness of the projective closure over the algebraic closure
/// of Q. Points at infinity are treated through gcds of the partials along
/// Z = 0; the affine chart through resultants with a Groebner basis
/// fallback that decides membership of 1 in (F, F_x, F_y).
SmoothnessReport smoothness_check(const PlaneCurve& c);

/// Affine part only (used for models that are singular at infinity by
/// design).
SmoothnessReport affine_smoothness_check(const PlaneCurve& c);

}  // namespace k2forge
