#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k2forge/algebra/bipoly.hpp"
#include "k2forge/curves/branches.hpp"
#include "k2forge/curves/curve.hpp"

namespace k2forge {

/// Order and leading coefficient of a function along a place, with respect
/// to the local parameter of the place.
struct LocalData {
  int ord = 0;
  Rat lead;
};

/// A curve together with the expansions computed on it so far. Functions
/// on the same curve share one context; lookups are thread-safe.
class CurveContext {
 public:
  explicit CurveContext(PlaneCurve c);

  const PlaneCurve& curve() const { return c_; }

  /// Places over the line at infinity, in branch order.
  std::vector<CurvePoint> places_at_infinity();
  /// Branch at p with y(t) known to at least `order` coefficients.
  Branch branch(const CurvePoint& p, int order);

  /// Local data of a polynomial at a place. Affine orders are intersection
  /// multiplicities; orders at infinity are valuations along the branch.
  /// Throws "zero function" if g vanishes on the curve.
  LocalData local(const BiPoly& g, const CurvePoint& p);

  /// g is divisible by the curve equation (pseudo-division).
  bool vanishes(const BiPoly& g) const;

 private:
  void ensure_branches(int order);
  LocalData local_affine(const BiPoly& g, const CurvePoint& p);
  LocalData local_infinite(const BiPoly& g, const CurvePoint& p);

  PlaneCurve c_;
  std::recursive_mutex mu_;
  int order_ = 0;
  std::vector<Branch> branches_;
  std::map<CurvePoint, std::pair<int, Branch>> local_params_;
  std::map<std::pair<std::string, CurvePoint>, LocalData> cache_;
};

using CurveRef = std::shared_ptr<CurveContext>;

inline CurveRef make_curve(PlaneCurve c) { return std::make_shared<CurveContext>(std::move(c)); }

/// Element of the function field of a curve, kept as constant * prod G_k^e_k
/// with pairwise distinct normalized polynomials G_k.
class FnElt {
 public:
  using Factor = std::pair<BiPoly, int>;

  FnElt() = default;
  FnElt(CurveRef c, const Rat& constant);
  FnElt(CurveRef c, const BiPoly& p);
  static FnElt quotient(CurveRef c, const BiPoly& num, const BiPoly& den);
  static FnElt factored(CurveRef c, const Rat& constant, const std::vector<Factor>& factors);

  const CurveRef& context() const { return c_; }
  const PlaneCurve& curve() const { return c_->curve(); }
  const Rat& constant() const { return k_; }
  const std::vector<Factor>& factors() const { return fs_; }

  BiPoly numerator() const;
  BiPoly denominator() const;

  bool is_constant() const { return fs_.empty(); }
  /// Zero in the function field.
  bool is_zero() const;
  /// Equality modulo the curve ideal.
  bool equals(const FnElt& o) const { return (*this - o).is_zero(); }

  /// Value at an affine point where the denominator does not vanish.
  Rat eval(const Rat& x, const Rat& y) const;

  FnElt inverse() const;
  FnElt pow(long e) const;
  FnElt one_minus() const;

  friend FnElt operator*(const FnElt& a, const FnElt& b);
  friend FnElt operator/(const FnElt& a, const FnElt& b) { return a * b.inverse(); }
  friend FnElt operator*(const Rat& s, const FnElt& a);
  friend FnElt operator+(const FnElt& a, const FnElt& b);
  friend FnElt operator-(const FnElt& a, const FnElt& b);

  /// "c*(G1)^2*(G2)/((G3)^4)" with the constant omitted when it is 1.
  std::string str() const;

 private:
  void add_factor(const BiPoly& p, int e);
  void check_same(const FnElt& o) const;

  CurveRef c_;
  Rat k_{1};
  std::vector<Factor> fs_;
};

/// Order and leading coefficient of f at p (see CurveContext::local).
LocalData local_data(const FnElt& f, const CurvePoint& p);

/// Rational places carrying the zeros and poles of the factors of f:
/// affine rational intersection points of each factor plus every place at
/// infinity. nullopt when some factor also meets the curve at non-rational
/// points.
std::optional<std::vector<CurvePoint>> rational_support(const FnElt& f);

}  // namespace k2forge
