#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k2forge/algebra/rat.hpp"
#include "k2forge/algebra/unipoly.hpp"

namespace k2forge {

enum class Var { x, y };

/// Exponent pair (x-exponent, y-exponent).
struct Monomial {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial over Q in x and y. No zero coefficients are
/// stored.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rat>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);
  BiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly x() { return monomial(Rat(1), 1, 0); }
  static BiPoly y() { return monomial(Rat(1), 0, 1); }
  static BiPoly monomial(const Rat& c, int i, int j);
  /// Embeds a univariate polynomial in the chosen variable.
  static BiPoly from_uni(const UniPoly& p, Var v);
  /// Expands sum_j coeffs[j](x) * y^j.
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& coeffs);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(int i, int j) const;
  int total_degree() const;
  int degree_in(Var v) const;

  Rat eval(const Rat& x, const Rat& y) const;
  double eval_double(double x, double y) const;
  BiPoly diff(Var v) const;
  BiPoly pow(unsigned e) const;
  /// p(X(x,y), Y(x,y)).
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const;
  /// p(x + dx, y + dy).
  BiPoly translate(const Rat& dx, const Rat& dy) const;
  BiPoly swap_vars() const;
  /// Restriction to a horizontal/vertical line: fixes `v` to `value` and
  /// returns the univariate polynomial in the other variable.
  UniPoly restrict(Var v, const Rat& value) const;
  /// Coefficients of the powers of `v`; each is a polynomial in the other
  /// variable.
  std::vector<UniPoly> coeffs_in(Var v) const;
  /// Exact division by y^k (throws if not divisible).
  BiPoly divide_by_y_power(int k) const;
  /// Homogeneous part of total degree k.
  BiPoly homogeneous_part(int k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  /// Canonical text: descending total degree, and inside a degree
  /// descending power of the second variable, e.g. "y^3 + (3/4)*x*y^2 - 2".
  std::string str(char xv = 'x', char yv = 'y') const;

 private:
  Terms t_;
};

/// Parses polynomial text in x and y: sums of products of rationals,
/// variables and parenthesised subexpressions with nonnegative integer
/// powers. Division is allowed by constants only.
BiPoly parse_bipoly(const std::string& text);

}  // namespace k2forge
