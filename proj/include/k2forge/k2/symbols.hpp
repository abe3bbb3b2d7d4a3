#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k2forge/k2/function.hpp"

namespace k2forge {

struct SymbolPair {
  FnElt f, h;
  long coefficient = 1;
};

struct K2Element {
  std::vector<SymbolPair> terms;
  std::vector<CurvePoint> declared_support;
};

struct Divisor {
  std::map<CurvePoint, int> entries;
  long degree() const;
  int operator[](const CurvePoint& p) const;
  /// "3(P) - 3(Q)" style text with points printed by CurvePoint::str.
  std::string str() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// A function with divisor order * (plus_point) - order * (minus_point).
struct TorsionFunction {
  FnElt fn;
  CurvePoint plus_point, minus_point;
  int order = 0;
};

/// Orders of f and h at one place and the tame symbol of {f, h} there.
struct TermValue {
  int ord_f = 0, ord_h = 0;
  Rat tame_value{1};
};

struct CertificateEntry {
  CurvePoint point;
  /// One value per term of the element.
  std::vector<TermValue> terms;
  /// Product of the term values raised to their coefficients.
  Rat tame_value{1};
};

struct Certificate {
  std::vector<CertificateEntry> entries;
  Rat product{1};
  bool pass = false;
  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
  /// First entry with a nontrivial value.
  std::optional<CurvePoint> offending_point() const;
};

int ord_at(const PlaneCurve& c, const FnElt& f, const CurvePoint& p);

/// Entries ord_p(f) over the candidates; throws "support incomplete" when
/// the degree is not zero.
Divisor divisor_of(const PlaneCurve& c, const FnElt& f, const std::vector<CurvePoint>& candidates);

/// T_p({f, h}) raised to the coefficient of s.
Rat tame_symbol(const PlaneCurve& c, const SymbolPair& s, const CurvePoint& p);

/// Tame values of e at every declared support point, after checking that
/// the support carries the divisors of all constituent functions.
Certificate verify_k2t(const PlaneCurve& c, const K2Element& e);

/// The elements S_1, S_2, S_3 attached to functions with
/// div(t_i) = m_i (P_{i+1}) - m_i (P_{i-1}).
std::vector<K2Element> construction_torsion(const PlaneCurve& c, const TorsionFunction& t1,
                                            const TorsionFunction& t2, const TorsionFunction& t3);

/// Checks that t has divisor order * plus - order * minus; throws
/// "not a torsion triple" otherwise.
void check_torsion_function(const PlaneCurve& c, const TorsionFunction& t);

struct NekovarElement {
  K2Element element;
  int m = 0;
  /// kappa_i = T_{P_i}({g/kappa, h}), in the order of the torsion data.
  std::vector<Rat> kappas;
  /// g was replaced by g^2 because its values at H cap C differ by sign.
  bool squared = false;
  Rat kappa;
  /// Intersection points of H with C and their multiplicities.
  std::vector<std::pair<CurvePoint, int>> h_points;
  std::vector<std::pair<CurvePoint, int>> g_points;
};

/// m {g/kappa, h} - sum (m/m_i) {kappa_i, g_i} for g = G/E, h = H/E. The
/// polynomial e may be a nonzero constant, standing for a power of the line
/// at infinity. Each torsion function g_i has zeros only at an affine point
/// P_i of G cap C and poles only over the point of maximal contact.
NekovarElement nekovar_element(const PlaneCurve& c, const BiPoly& e, const BiPoly& g, const BiPoly& h,
                               const std::vector<TorsionFunction>& torsion_data, const Rat& kappa);

}  // namespace k2forge
