#include "k2forge/algebra/linalg.hpp"

#include <set>

#include "k2forge/error.hpp"

namespace k2forge {

Rat determinant(Matrix m) {
  size_t n = m.size();
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Rat f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c].inverse();
    for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (size_t o = 0; o < rows; ++o) {
      if (o == r || m[o][c].is_zero()) continue;
      Rat f = m[o][c];
      for (size_t k = c; k < cols; ++k) m[o][k] -= f * m[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<Rat> solve(Matrix a, std::vector<Rat> b) {
  size_t n = a.size();
  if (b.size() != n) throw PreconditionError("dimension mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("dimension mismatch");
    a[i].push_back(b[i]);
  }
  auto piv = rref(a);
  if (piv.size() != n || (n && piv.back() >= static_cast<int>(n))) throw PreconditionError("singular system");
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<std::vector<Rat>> kernel(Matrix m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  auto piv = rref(m);
  std::set<int> pivset(piv.begin(), piv.end());
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (pivset.count(static_cast<int>(f))) continue;
    std::vector<Rat> v(cols);
    v[f] = Rat(1);
    for (size_t r = 0; r < piv.size(); ++r) v[static_cast<size_t>(piv[r])] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> vandermonde_solve(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  size_t n = nodes.size();
  if (values.size() != n) throw PreconditionError("nodes and values differ in length");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw PreconditionError("singular Vandermonde");
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rat> dd = values;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - k]);
  std::vector<Rat> coeffs(n);
  for (size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (size_t i = n - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - nodes[k] * coeffs[i];
    if (n) coeffs[0] = -nodes[k] * coeffs[0];
    coeffs[0] += dd[k];
  }
  return coeffs;
}

}  // namespace k2forge
