#include "k2forge/algebra/resultant.hpp"

#include "k2forge/error.hpp"

namespace k2forge {

Matrix sylvester_matrix(const UniPoly& a, int m, const UniPoly& b, int n) {
  size_t size = static_cast<size_t>(m + n);
  Matrix s(size, std::vector<Rat>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = b.coeff(n - k);
  return s;
}

namespace {

Rat sign_pow(long e) { return (e % 2) ? Rat(-1) : Rat(1); }

}  // namespace

Rat resultant(const UniPoly& a0, const UniPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Rat(0);
  int m = a0.degree(), n = b0.degree();
  if (m + n <= 4) return determinant(sylvester_matrix(a0, m, b0, n));
  // Euclidean remainder sequence over Q:
  // Res(a, b) = (-1)^(mn) lc(b)^(m - k) Res(b, a mod b), k = deg(a mod b).
  UniPoly a = a0, b = b0;
  Rat acc(1);
  for (;;) {
    m = a.degree();
    n = b.degree();
    if (n == 0) return acc * b.lead().pow(m);
    if (m < n) {
      acc *= sign_pow(static_cast<long>(m) * n);
      std::swap(a, b);
      continue;
    }
    UniPoly r = a % b;
    if (r.is_zero()) return Rat(0);
    acc *= sign_pow(static_cast<long>(m) * n) * b.lead().pow(m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rat resultant_formal(const UniPoly& a, int m, const UniPoly& b, int n) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  int da = a.degree(), db = b.degree();
  if (da < m && db < n) return Rat(0);
  if (da < m) return sign_pow(static_cast<long>(m - da) * n) * b.lead().pow(m - da) * resultant(a, b);
  if (db < n) return a.lead().pow(n - db) * resultant(a, b);
  return resultant(a, b);
}

UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of a zero polynomial");
  int m = p.degree_in(eliminate), n = q.degree_in(eliminate);
  if (m <= 0 && n <= 0) throw PreconditionError("nothing to eliminate");
  Var other = eliminate == Var::x ? Var::y : Var::x;
  int bound = n * std::max(p.degree_in(other), 0) + m * std::max(q.degree_in(other), 0);
  std::vector<Rat> nodes, values;
  for (int k = 0; k <= bound; ++k) {
    Rat at(k);
    nodes.push_back(at);
    values.push_back(resultant_formal(p.restrict(other, at), m, q.restrict(other, at), n));
  }
  return UniPoly(vandermonde_solve(nodes, values));
}

Rat discriminant(const UniPoly& p) {
  int n = p.degree();
  if (n < 1) throw PreconditionError("discriminant of a constant polynomial");
  long e = static_cast<long>(n) * (n - 1) / 2;
  return sign_pow(e) * resultant(p, p.derivative()) / p.lead();
}

}  // namespace k2forge
