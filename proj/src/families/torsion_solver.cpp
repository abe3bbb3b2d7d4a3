#include "k2forge/families/torsion_solver.hpp"

#include <algorithm>

#include "k2forge/algebra/linalg.hpp"
#include "k2forge/error.hpp"

namespace k2forge {

TorsionSolver::TorsionSolver(CurveRef c, std::vector<CurvePoint> points) : c_(std::move(c)) {
  support_ = std::move(points);
  for (const auto& p : c_->places_at_infinity()) support_.push_back(p);
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

const Divisor& TorsionSolver::add(const FnElt& f) {
  fns_.push_back(f);
  divs_.push_back(divisor_of(c_->curve(), f, support_));
  return divs_.back();
}

TorsionFunction TorsionSolver::between(const CurvePoint& plus, const CurvePoint& minus) const {
  size_t n = fns_.size();
  Matrix m;
  for (const auto& p : support_) {
    std::vector<Rat> row;
    for (const auto& d : divs_) row.emplace_back(d[p]);
    row.emplace_back(p == plus ? 1 : (p == minus ? -1 : 0));
    m.push_back(std::move(row));
  }
  std::vector<int> piv = rref(m);
  if (!piv.empty() && piv.back() == static_cast<int>(n))
    throw PreconditionError("no torsion function: " + plus.str() + " - " + minus.str() +
                            " is not a combination of the known divisors");
  std::vector<Rat> coef(n);
  for (size_t r = 0; r < piv.size(); ++r) coef[piv[r]] = m[r][n];
  mpz_class den = 1;
  for (const auto& c : coef) den = lcm(den, c.denominator());
  FnElt f(c_, Rat(1));
  for (size_t k = 0; k < n; ++k) {
    Rat e = coef[k] * Rat(den);
    if (!e.is_zero()) f = f * fns_[k].pow(e.numerator().get_si());
  }
  return {f, plus, minus, static_cast<int>(den.get_si())};
}

K2Element TorsionSolver::element(const CurvePoint& p1, const CurvePoint& p2, const CurvePoint& p3) const {
  return construction_torsion(c_->curve(), between(p2, p3), between(p3, p1), between(p1, p2)).front();
}

}  // namespace k2forge
