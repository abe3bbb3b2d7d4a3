#include "k2forge/algebra/groebner.hpp"

#include <algorithm>
#include <deque>

#include "k2forge/error.hpp"

namespace k2forge {

namespace {

bool lex_less(const Monomial& a, const Monomial& b) { return a.j != b.j ? a.j < b.j : a.i < b.i; }

bool divides(const Monomial& a, const Monomial& b) { return a.i <= b.i && a.j <= b.j; }

BiPoly make_monic(const BiPoly& p) {
  Rat lc = p.coeff(lex_lead(p).i, lex_lead(p).j);
  return p * BiPoly(lc.inverse());
}

/// Full reduction of p by the set g.
BiPoly reduce(BiPoly p, const std::vector<BiPoly>& g) {
  BiPoly rest;
  while (!p.is_zero()) {
    Monomial lm = lex_lead(p);
    Rat lc = p.coeff(lm.i, lm.j);
    bool reduced = false;
    for (const auto& q : g) {
      Monomial lq = lex_lead(q);
      if (!divides(lq, lm)) continue;
      Rat f = lc / q.coeff(lq.i, lq.j);
      p -= BiPoly::monomial(f, lm.i - lq.i, lm.j - lq.j) * q;
      reduced = true;
      break;
    }
    if (!reduced) {
      rest += BiPoly::monomial(lc, lm.i, lm.j);
      p -= BiPoly::monomial(lc, lm.i, lm.j);
    }
  }
  return rest;
}

BiPoly spoly(const BiPoly& a, const BiPoly& b) {
  Monomial la = lex_lead(a), lb = lex_lead(b);
  Monomial l{std::max(la.i, lb.i), std::max(la.j, lb.j)};
  BiPoly ma = BiPoly::monomial(a.coeff(la.i, la.j).inverse(), l.i - la.i, l.j - la.j);
  BiPoly mb = BiPoly::monomial(b.coeff(lb.i, lb.j).inverse(), l.i - lb.i, l.j - lb.j);
  return ma * a - mb * b;
}

}  // namespace

Monomial lex_lead(const BiPoly& p) {
  if (p.is_zero()) throw InternalError("leading monomial of zero");
  Monomial best = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    if (lex_less(best, m)) best = m;
  return best;
}

std::vector<BiPoly> groebner_lex(std::vector<BiPoly> gens) {
  std::vector<BiPoly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(make_monic(p));
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial li = lex_lead(g[i]), lj = lex_lead(g[j]);
    if (std::min(li.i, lj.i) == 0 && std::min(li.j, lj.j) == 0) continue;  // coprime leads
    BiPoly r = reduce(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    r = make_monic(r);
    if (r.is_constant()) return {BiPoly(1)};
    for (size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(r);
  }
  // Minimalize and interreduce.
  std::vector<BiPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial li = lex_lead(g[i]), lj = lex_lead(g[j]);
      if (divides(lj, li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<BiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    BiPoly r = reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(make_monic(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const BiPoly& a, const BiPoly& b) { return lex_less(lex_lead(a), lex_lead(b)); });
  return reduced;
}

}  // namespace k2forge
