#include "k2forge/k2/function.hpp"

#include <algorithm>
#include <sstream>

#include "k2forge/curves/intersection.hpp"
#include "k2forge/error.hpp"

namespace k2forge {

CurveContext::CurveContext(PlaneCurve c) : c_(std::move(c)) {}

void CurveContext::ensure_branches(int order) {
  if (order_ == 0) {
    int pole = 0;
    for (const auto& b : branches_at_infinity(c_, 1)) {
      pole = std::max(pole, -b.x.val());
      if (!b.y.is_zero()) pole = std::max(pole, -b.y.val());
    }
    order_ = default_series_order(pole);
    branches_ = branches_at_infinity(c_, order_);
  }
  if (order > order_) {
    order_ = order;
    branches_ = branches_at_infinity(c_, order_);
  }
}

std::vector<CurvePoint> CurveContext::places_at_infinity() {
  std::lock_guard lock(mu_);
  ensure_branches(0);
  std::vector<CurvePoint> out;
  for (const auto& b : branches_) out.push_back(b.point);
  return out;
}

Branch CurveContext::branch(const CurvePoint& p, int order) {
  std::lock_guard lock(mu_);
  ensure_branches(order);
  for (const auto& b : branches_)
    if (b.point == p) return b;
  throw PreconditionError("no branch of the curve at " + p.str());
}

bool CurveContext::vanishes(const BiPoly& g) const {
  if (g.is_zero()) return true;
  BiPoly f = c_.poly(), r = g;
  if (f.degree_in(Var::y) == 0) {
    f = f.swap_vars();
    r = r.swap_vars();
  }
  int n = f.degree_in(Var::y);
  BiPoly lf = BiPoly::from_uni(f.coeffs_in(Var::y).back(), Var::x);
  while (!r.is_zero() && r.degree_in(Var::y) >= n) {
    int k = r.degree_in(Var::y);
    BiPoly lr = BiPoly::from_uni(r.coeffs_in(Var::y).back(), Var::x);
    r = lf * r - lr * BiPoly::monomial(Rat(1), 0, k - n) * f;
  }
  return r.is_zero();
}

LocalData CurveContext::local(const BiPoly& g, const CurvePoint& p) {
  if (g.is_constant()) {
    if (g.is_zero()) throw PreconditionError("zero function");
    return {0, g.constant_term()};
  }
  std::lock_guard lock(mu_);
  auto key = std::make_pair(g.str(), p);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  LocalData d = p.is_affine() ? local_affine(g, p) : local_infinite(g, p);
  cache_.emplace(std::move(key), d);
  return d;
}

LocalData CurveContext::local_affine(const BiPoly& g, const CurvePoint& p) {
  const BiPoly& f = c_.poly();
  if (!f.eval(p.x(), p.y()).is_zero()) throw PreconditionError("point " + p.str() + " is not on the curve");
  if (f.diff(Var::x).eval(p.x(), p.y()).is_zero() && f.diff(Var::y).eval(p.x(), p.y()).is_zero())
    throw PreconditionError("point " + p.str() + " is singular");
  Rat v = g.eval(p.x(), p.y());
  if (!v.is_zero()) return {0, v};
  if (vanishes(g)) throw PreconditionError("zero function");
  int ord = intersection_at_origin(f.translate(p.x(), p.y()), g.translate(p.x(), p.y()),
                                   c_.degree() * g.total_degree());
  auto it = local_params_.find(p);
  if (it == local_params_.end() || it->second.first <= ord) {
    int order = std::max(2 * ord + 2, 8);
    it = local_params_.insert_or_assign(p, std::make_pair(order, local_parametrization(c_, p, order))).first;
  }
  const Branch& b = it->second.second;
  PowerSeries s = substitute(g, b.x, b.y);
  if (s.is_zero() || s.val() != ord) throw InternalError("series order disagrees with the intersection number");
  return {ord, s.lead()};
}

LocalData CurveContext::local_infinite(const BiPoly& g, const CurvePoint& p) {
  if (vanishes(g)) throw PreconditionError("zero function");
  ensure_branches(0);
  long cap = static_cast<long>(c_.degree()) * g.total_degree() + 1;
  for (int order = order_; order <= (1 << 16); order *= 2) {
    Branch b = branch(p, order);
    PowerSeries s = substitute(g, b.x, b.y);
    if (!s.is_zero()) return {s.val(), s.lead()};
    if (s.prec() > cap) throw PreconditionError("zero function");
  }
  throw InternalError("branch expansion did not separate the function from zero");
}

namespace {

/// Scales p so that its largest monomial has coefficient 1; returns the
/// scale removed.
Rat normalize(BiPoly& p) {
  Rat lc = p.terms().rbegin()->second;
  if (!lc.is_one()) p = BiPoly(lc.inverse()) * p;
  return lc;
}

std::string wrap(const BiPoly& p, int e) {
  std::string s = "(" + p.str() + ")";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

FnElt::FnElt(CurveRef c, const Rat& constant) : c_(std::move(c)), k_(constant) {}

FnElt::FnElt(CurveRef c, const BiPoly& p) : c_(std::move(c)) { add_factor(p, 1); }

FnElt FnElt::quotient(CurveRef c, const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw PreconditionError("zero denominator");
  FnElt f(std::move(c), num);
  f.add_factor(den, -1);
  return f;
}

FnElt FnElt::factored(CurveRef c, const Rat& constant, const std::vector<Factor>& factors) {
  FnElt f(std::move(c), constant);
  for (const auto& [p, e] : factors) f.add_factor(p, e);
  return f;
}

void FnElt::add_factor(const BiPoly& p, int e) {
  if (e == 0) return;
  if (p.is_constant()) {
    Rat c = p.constant_term();
    if (c.is_zero() && e < 0) throw PreconditionError("zero denominator");
    k_ *= c.pow(e);
    return;
  }
  BiPoly q = p;
  k_ *= normalize(q).pow(e);
  for (auto it = fs_.begin(); it != fs_.end(); ++it) {
    if (it->first == q) {
      it->second += e;
      if (it->second == 0) fs_.erase(it);
      return;
    }
  }
  fs_.emplace_back(std::move(q), e);
}

void FnElt::check_same(const FnElt& o) const {
  if (c_ != o.c_ && !(c_ && o.c_ && c_->curve() == o.c_->curve()))
    throw PreconditionError("functions live on different curves");
}

BiPoly FnElt::numerator() const {
  BiPoly n(k_);
  for (const auto& [p, e] : fs_)
    if (e > 0) n = n * p.pow(static_cast<unsigned>(e));
  return n;
}

BiPoly FnElt::denominator() const {
  BiPoly d(1);
  for (const auto& [p, e] : fs_)
    if (e < 0) d = d * p.pow(static_cast<unsigned>(-e));
  return d;
}

bool FnElt::is_zero() const {
  if (k_.is_zero()) return true;
  for (const auto& [p, e] : fs_)
    if (e > 0 && c_->vanishes(p)) return true;
  return false;
}

Rat FnElt::eval(const Rat& x, const Rat& y) const {
  Rat v = k_;
  for (const auto& [p, e] : fs_) {
    Rat pv = p.eval(x, y);
    if (pv.is_zero() && e < 0) throw PreconditionError("pole at (" + x.str() + ", " + y.str() + ")");
    v *= pv.pow(e);
  }
  return v;
}

FnElt FnElt::inverse() const {
  if (k_.is_zero()) throw PreconditionError("zero function");
  FnElt r(c_, k_.inverse());
  for (const auto& [p, e] : fs_) r.fs_.emplace_back(p, -e);
  return r;
}

FnElt FnElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FnElt r(c_, k_.pow(e));
  if (e == 0) return FnElt(c_, Rat(1));
  for (const auto& [p, k] : fs_) r.fs_.emplace_back(p, static_cast<int>(k * e));
  return r;
}

FnElt FnElt::one_minus() const { return FnElt(c_, Rat(1)) - *this; }

FnElt operator*(const FnElt& a, const FnElt& b) {
  a.check_same(b);
  FnElt r = a;
  r.k_ *= b.k_;
  for (const auto& [p, e] : b.fs_) r.add_factor(p, e);
  return r;
}

FnElt operator*(const Rat& s, const FnElt& a) {
  FnElt r = a;
  r.k_ *= s;
  if (s.is_zero()) r.fs_.clear();
  return r;
}

FnElt operator+(const FnElt& a, const FnElt& b) {
  a.check_same(b);
  if (a.k_.is_zero()) return b;
  if (b.k_.is_zero()) return a;
  // Common denominator: each denominator factor to its larger exponent.
  std::vector<FnElt::Factor> den;
  auto merge = [&den](const FnElt& f) {
    for (const auto& [p, e] : f.fs_) {
      if (e >= 0) continue;
      auto it = std::find_if(den.begin(), den.end(), [&](const auto& d) { return d.first == p; });
      if (it == den.end()) den.emplace_back(p, -e);
      else it->second = std::max(it->second, -e);
    }
  };
  merge(a);
  merge(b);
  auto lift = [&den](const FnElt& f) {
    BiPoly n(f.k_);
    for (const auto& [p, e] : f.fs_)
      if (e > 0) n = n * p.pow(static_cast<unsigned>(e));
    for (const auto& [p, e] : den) {
      int have = 0;
      for (const auto& [q, k] : f.fs_)
        if (k < 0 && q == p) have = -k;
      if (e > have) n = n * p.pow(static_cast<unsigned>(e - have));
    }
    return n;
  };
  BiPoly num = lift(a) + lift(b);
  FnElt r(a.c_, Rat(1));
  if (num.is_zero()) return FnElt(a.c_, Rat(0));
  r.add_factor(num, 1);
  for (const auto& [p, e] : den) r.add_factor(p, -e);
  return r;
}

FnElt operator-(const FnElt& a, const FnElt& b) { return a + Rat(-1) * b; }

std::string FnElt::str() const {
  std::vector<std::string> num, den;
  for (const auto& [p, e] : fs_) (e > 0 ? num : den).push_back(wrap(p, e > 0 ? e : -e));
  std::ostringstream os;
  bool lead = !k_.is_one() || num.empty();
  if (lead) os << (k_.is_integer() ? k_.str() : "(" + k_.str() + ")");
  for (size_t i = 0; i < num.size(); ++i) os << (i || lead ? "*" : "") << num[i];
  if (!den.empty()) {
    os << "/";
    if (den.size() > 1) os << "(";
    for (size_t i = 0; i < den.size(); ++i) os << (i ? "*" : "") << den[i];
    if (den.size() > 1) os << ")";
  }
  return os.str();
}

LocalData local_data(const FnElt& f, const CurvePoint& p) {
  if (f.constant().is_zero()) throw PreconditionError("zero function");
  LocalData out{0, f.constant()};
  for (const auto& [g, e] : f.factors()) {
    LocalData d = f.context()->local(g, p);
    out.ord += e * d.ord;
    out.lead *= d.lead.pow(e);
  }
  return out;
}

std::optional<std::vector<CurvePoint>> rational_support(const FnElt& f) {
  std::vector<CurvePoint> inf = f.context()->places_at_infinity();
  std::vector<CurvePoint> out;
  bool complete = true;
  for (const auto& [g, e] : f.factors()) {
    if (f.context()->vanishes(g)) throw PreconditionError("zero function");
    IntersectionCycle cyc = intersect(f.curve(), PlaneCurve(g));
    long total = 0;
    for (const auto& [p, m] : cyc.points) {
      if (!p.is_affine()) continue;
      total += m;
      out.push_back(p);
    }
    for (const auto& p : inf) total += f.context()->local(g, p).ord;
    if (total != 0) complete = false;
  }
  if (!complete) return std::nullopt;
  out.insert(out.end(), inf.begin(), inf.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace k2forge
