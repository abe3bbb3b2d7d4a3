#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "k2forge/algebra/rat.hpp"

namespace k2forge {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);
  static UniPoly x() { return monomial(Rat(1), 1); }
  /// (x - r)
  static UniPoly linear_root(const Rat& r) { return UniPoly({-r, Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero outside the stored range.
  Rat coeff(int i) const;
  const Rat& lead() const;

  Rat eval(const Rat& at) const;
  UniPoly derivative() const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned e) const;
  UniPoly monic() const;
  /// Lowest i with a nonzero coefficient; -1 for the zero polynomial.
  int low_order() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly squarefree_part(const UniPoly& p);

/// Largest m such that (x - r)^m divides p. Throws on p = 0.
int root_multiplicity(const UniPoly& p, const Rat& r);

/// Distinct rational roots in increasing order, found by exact Sturm
/// isolation of the real roots followed by an integrality test.
std::vector<Rat> rational_roots(const UniPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const UniPoly& p, const Rat& lo, const Rat& hi);

}  // namespace k2forge
