#pragma once

#include <climits>
#include <string>
#include <vector>

#include "k2forge/algebra/bipoly.hpp"
#include "k2forge/algebra/rat.hpp"
#include "k2forge/algebra/unipoly.hpp"

namespace k2forge {

/// Truncated Laurent series in t: sum_k coeff(k) t^k + O(t^prec).
/// A series built from a polynomial may be exact (prec == kExact).
class PowerSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  PowerSeries() = default;
  /// coeffs[k] multiplies t^(val + k); known up to O(t^prec).
  PowerSeries(int val, std::vector<Rat> coeffs, int prec);

  static PowerSeries zero(int prec = kExact) { return PowerSeries(prec, {}, prec); }
  static PowerSeries constant(const Rat& c, int prec = kExact);
  static PowerSeries monomial(const Rat& c, int e, int prec = kExact);
  static PowerSeries from_poly(const UniPoly& p, int prec = kExact);

  /// Valuation of the known part; equals prec when zero to truncation.
  int val() const { return val_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  /// Coefficient at the valuation.
  Rat lead() const;

  PowerSeries truncate(int prec) const;
  /// Same known coefficients with a larger precision; the new coefficients
  /// are taken as zero (used to seed Newton iterations).
  PowerSeries extend(int prec) const { return PowerSeries(val_, c_, prec); }
  /// Coefficients from the valuation on.
  const std::vector<Rat>& coeffs() const { return c_; }
  PowerSeries derivative() const;
  PowerSeries pow(long e) const;
  /// this(b(t)). A truncated outer series needs val(b) > 0; negative powers
  /// in the outer series need b invertible.
  PowerSeries compose(const PowerSeries& b) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rat& s, const PowerSeries& a);
  /// Structural equality of the known coefficients and precision.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  std::string str() const;

 private:
  void normalize();
  int val_ = kExact;
  int prec_ = kExact;
  std::vector<Rat> c_;
};

/// Throws "insufficient precision" when a is zero to its truncation.
PowerSeries invert(const PowerSeries& a);
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
inline PowerSeries series_invert(const PowerSeries& a) { return invert(a); }
inline PowerSeries series_compose(const PowerSeries& a, const PowerSeries& b) { return a.compose(b); }

/// p(x(t), y(t)).
PowerSeries substitute(const BiPoly& p, const PowerSeries& x, const PowerSeries& y);

}  // namespace k2forge
