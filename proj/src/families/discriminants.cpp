#include "k2forge/families/discriminants.hpp"

#include <sstream>

namespace k2forge {

Rat ClosedFormDisc::value() const {
  Rat v = constant;
  for (const auto& f : factors) {
    if (f.value.is_zero()) return Rat(0);
    v *= f.value.pow(f.exponent);
  }
  return v;
}

bool ClosedFormDisc::vanishes() const { return vanishing_factor().has_value(); }

std::optional<DiscFactor> ClosedFormDisc::vanishing_factor() const {
  for (const auto& f : factors)
    if (f.value.is_zero()) return f;
  return std::nullopt;
}

std::string ClosedFormDisc::str() const {
  std::ostringstream os;
  os << constant.str();
  for (const auto& f : factors) {
    os << " * " << f.name;
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  return os.str();
}

namespace {

ClosedFormDisc lines_common(const Rat& a, const Rat& b, const Rat& c) {
  Rat b3 = b.pow(3);
  ClosedFormDisc d;
  d.factors = {
      {"a", a, 42},
      {"b", b, 36},
      {"(a + b^3)", a + b3, 3},
      {"(2a - 2b^3 - c)", Rat(2) * a - Rat(2) * b3 - c, 6},
      {"(3a - 2b^3 - c)", Rat(3) * a - Rat(2) * b3 - c, 1},
      {"(3a - b^3 - c)", Rat(3) * a - b3 - c, 1},
      {"(6a + 2b^3 + c)", Rat(6) * a + Rat(2) * b3 + c, 2},
  };
  return d;
}

Rat lines_q_with(const Rat& a, const Rat& b, const Rat& c, long k1, long k2) {
  Rat b3 = b.pow(3), b6 = b.pow(6), b9 = b.pow(9), b12 = b.pow(12), b15 = b.pow(15);
  return Rat(9) * a.pow(5) + Rat(30) * a.pow(4) * b3 - Rat(24) * a.pow(4) * c + Rat(k1) * a.pow(3) * b6 +
         Rat(23) * a.pow(3) * b3 * c + Rat(16) * a.pow(3) * c * c + Rat(12) * a * a * b9 +
         Rat(k2) * a * a * b6 * c + Rat(12) * a * a * b3 * c * c - Rat(3) * a * b12 - Rat(3) * a * b9 * c -
         Rat(2) * b15 - Rat(5) * b12 * c - Rat(4) * b9 * c * c - b6 * c.pow(3);
}

}  // namespace

Rat lines_q(const Rat& a, const Rat& b, const Rat& c) { return lines_q_with(a, b, c, 34, 33); }

Rat lines_q_as_printed(const Rat& a, const Rat& b, const Rat& c) { return lines_q_with(a, b, c, 4, 3); }

ClosedFormDisc lines_disc(const Rat& a, const Rat& b, const Rat& c) {
  ClosedFormDisc d = lines_common(a, b, c);
  d.factors.push_back({"q(a,b,c)", lines_q(a, b, c), 1});
  return d;
}

ClosedFormDisc lines_disc_as_printed(const Rat& a, const Rat& b, const Rat& c) {
  ClosedFormDisc d = lines_common(a, b, c);
  d.factors.push_back({"q(a,b,c)", lines_q_as_printed(a, b, c), 1});
  return d;
}

ClosedFormDisc ct_disc(const Rat& t) {
  ClosedFormDisc d;
  d.constant = Rat(2).pow(-52);
  d.factors = {
      {"(t - 1)", t - Rat(1), 2},
      {"(t + 3)", t + Rat(3), 6},
      {"(2t + 5)", Rat(2) * t + Rat(5), 1},
      {"(2t + 7)", Rat(2) * t + Rat(7), 1},
      {"(32t^3 + 96t^2 - 12t + 5)", Rat(32) * t.pow(3) + Rat(96) * t * t - Rat(12) * t + Rat(5), 1},
  };
  return d;
}

Rat ct_i3(const Rat& t) {
  return Rat(2).pow(-7) * (Rat(16) * t.pow(3) + Rat(84) * t * t + Rat(98) * t - Rat(15));
}

ClosedFormDisc conic_1t_factors(const Rat& a, const Rat& d1, const Rat& d4) {
  ClosedFormDisc d;
  d.factors = {
      {"a", a, 42},
      {"(3a^2 - 4d4)", Rat(3) * a * a - Rat(4) * d4, 2},
      {"(3a - 2d1)", Rat(3) * a - Rat(2) * d1, 8},
      {"(13a^2 - 4a d1 - 4d4)", Rat(13) * a * a - Rat(4) * a * d1 - Rat(4) * d4, 3},
  };
  return d;
}

ClosedFormDisc conic_2t_disc(const Rat& a1, const Rat& a2) {
  Rat s = a1 * a1 + a1 * a2 + a2 * a2;
  auto m = [&](long c, int i, int j) { return Rat(c) * a1.pow(i) * a2.pow(j); };
  ClosedFormDisc d;
  d.constant = Rat(-43046721, 67108864);
  d.factors = {
      {"a1", a1, 42},
      {"a2", a2, 42},
      {"(a1^2 + a1 a2 + a2^2)", s, -22},
      {"(4a1^3 + 8a1^2 a2 + 12a1 a2^2 + 3a2^3)", m(4, 3, 0) + m(8, 2, 1) + m(12, 1, 2) + m(3, 0, 3), 3},
      {"(a1 - a2)", a1 - a2, 4},
      {"(a1 + a2)", a1 + a2, 2},
      {"(a1^8 + 22a1^7 a2 + ... + a2^8)",
       m(1, 8, 0) + m(22, 7, 1) + m(67, 6, 2) + m(140, 5, 3) + m(161, 4, 4) + m(140, 3, 5) + m(67, 2, 6) +
           m(22, 1, 7) + m(1, 0, 8),
       1},
      {"(3a1^3 + 12a1^2 a2 + 8a1 a2^2 + 4a2^3)", m(3, 3, 0) + m(12, 2, 1) + m(8, 1, 2) + m(4, 0, 3), 3},
  };
  return d;
}

ClosedFormDisc conic_pq_disc(const Rat& a, const Rat& b) {
  Rat b3 = b.pow(3);
  auto m = [&](long c, int i, int j) { return Rat(c) * a.pow(i) * b.pow(j); };
  ClosedFormDisc d;
  d.constant = Rat(-4);
  d.factors = {
      {"a", a, 42},
      {"b", b, 42},
      {"(-8b^18 - 36ab^15 - 18a^2b^12 + 189a^3b^9 + 351a^4b^6 + 162a^5b^3 + 27a^6)",
       m(-8, 0, 18) + m(-36, 1, 15) + m(-18, 2, 12) + m(189, 3, 9) + m(351, 4, 6) + m(162, 5, 3) + m(27, 6, 0), 1},
      {"(2b^3 + 3a)", Rat(2) * b3 + Rat(3) * a, 2},
      {"(144b^12 + 576ab^9 + 504a^2b^6 + 112a^3b^3 + 9a^4)",
       m(144, 0, 12) + m(576, 1, 9) + m(504, 2, 6) + m(112, 3, 3) + m(9, 4, 0), 2},
  };
  return d;
}

}  // namespace k2forge
