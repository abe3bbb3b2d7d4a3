#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k2forge/algebra/rat.hpp"

namespace k2forge {

struct DiscFactor {
  /// Factor text in the family parameters, e.g. "(3a - b^3 - c)".
  std::string name;
  Rat value;
  int exponent = 1;
};

/// A discriminant kept as constant * prod factor^exponent, evaluated at one
/// parameter tuple.
struct ClosedFormDisc {
  Rat constant{1};
  std::vector<DiscFactor> factors;

  /// Product of the factors; zero as soon as one factor vanishes.
  Rat value() const;
  bool vanishes() const;
  std::optional<DiscFactor> vanishing_factor() const;
  /// "a^42 * (a + b^3)^3 * ..." naming the first vanishing factor last.
  std::string str() const;
};

/// Line-configuration quartics with parameters (a, b, c). The corrected
/// cubic-in-c factor is used; see lines_q_as_printed for the other form.
ClosedFormDisc lines_disc(const Rat& a, const Rat& b, const Rat& c);
/// The degree 15 factor q(a, b, c) in the form that vanishes exactly on the
/// singular members.
Rat lines_q(const Rat& a, const Rat& b, const Rat& c);
/// Variant with 4 a^3 b^6 and 3 a^2 b^6 c in place of 34 a^3 b^6 and
/// 33 a^2 b^6 c. It does not cut out the singular locus.
Rat lines_q_as_printed(const Rat& a, const Rat& b, const Rat& c);
/// lines_disc with lines_q_as_printed in place of lines_q.
ClosedFormDisc lines_disc_as_printed(const Rat& a, const Rat& b, const Rat& c);

/// 2^-52 (t-1)^2 (t+3)^6 (2t+5) (2t+7) (32t^3 + 96t^2 - 12t + 5).
ClosedFormDisc ct_disc(const Rat& t);
/// 2^-7 (16t^3 + 84t^2 + 98t - 15).
Rat ct_i3(const Rat& t);

/// Explicit factors for the conic family with one vertical flex tangent;
/// the remaining factor of weighted degree 12 is not part of the product.
ClosedFormDisc conic_1t_factors(const Rat& a, const Rat& d1, const Rat& d4);
/// Conic family with two vertical flex tangents at x = a1^3, a2^3.
ClosedFormDisc conic_2t_disc(const Rat& a1, const Rat& a2);
/// Conic family through the line-configuration points P and Q.
ClosedFormDisc conic_pq_disc(const Rat& a, const Rat& b);

}  // namespace k2forge
