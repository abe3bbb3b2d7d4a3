#include "k2forge/algebra/series.hpp"

#include <algorithm>
#include <sstream>

#include "k2forge/error.hpp"

namespace k2forge {

namespace {

int cap(long v) {
  return static_cast<int>(std::clamp<long>(v, -PowerSeries::kExact, PowerSeries::kExact));
}

int prec_sum(int v, int p) {
  if (p >= PowerSeries::kExact) return PowerSeries::kExact;
  return cap(static_cast<long>(v) + p);
}

}  // namespace

PowerSeries::PowerSeries(int val, std::vector<Rat> coeffs, int prec)
    : val_(val), prec_(prec), c_(std::move(coeffs)) {
  normalize();
}

void PowerSeries::normalize() {
  if (!exact() && static_cast<long>(val_) + static_cast<long>(c_.size()) > prec_) {
    long keep = static_cast<long>(prec_) - val_;
    c_.resize(static_cast<size_t>(std::max(0L, keep)));
  }
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  val_ += static_cast<int>(lead);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PowerSeries PowerSeries::constant(const Rat& c, int prec) { return PowerSeries(0, {c}, prec); }

PowerSeries PowerSeries::monomial(const Rat& c, int e, int prec) { return PowerSeries(e, {c}, prec); }

PowerSeries PowerSeries::from_poly(const UniPoly& p, int prec) { return PowerSeries(0, p.coeffs(), prec); }

Rat PowerSeries::coeff(int k) const {
  if (k >= prec_) throw PreconditionError("insufficient precision");
  long idx = static_cast<long>(k) - val_;
  if (idx < 0 || idx >= static_cast<long>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(idx)];
}

Rat PowerSeries::lead() const {
  if (c_.empty()) throw PreconditionError("insufficient precision");
  return c_.front();
}

PowerSeries PowerSeries::truncate(int prec) const {
  return PowerSeries(val_, c_, std::min(prec, prec_));
}

PowerSeries PowerSeries::derivative() const {
  std::vector<Rat> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * Rat(val_ + static_cast<long>(k));
  return PowerSeries(val_ - 1, std::move(out), exact() ? kExact : prec_ - 1);
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int prec = std::min(a.prec_, b.prec_);
  if (a.is_zero()) return b.truncate(prec);
  if (b.is_zero()) return a.truncate(prec);
  int lo = std::min(a.val_, b.val_);
  long hi = std::max(static_cast<long>(a.val_) + static_cast<long>(a.c_.size()),
                     static_cast<long>(b.val_) + static_cast<long>(b.c_.size()));
  hi = std::min<long>(hi, prec);
  if (hi <= lo) return PowerSeries::zero(prec);
  std::vector<Rat> out(static_cast<size_t>(hi - lo));
  for (size_t k = 0; k < a.c_.size() && a.val_ + static_cast<long>(k) < hi; ++k)
    out[static_cast<size_t>(a.val_ - lo) + k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size() && b.val_ + static_cast<long>(k) < hi; ++k)
    out[static_cast<size_t>(b.val_ - lo) + k] += b.c_[k];
  return PowerSeries(lo, std::move(out), prec);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int prec = std::min(prec_sum(a.val_, b.prec_), prec_sum(b.val_, a.prec_));
  if (a.is_zero() || b.is_zero()) return PowerSeries::zero(prec);
  int val = a.val_ + b.val_;
  long len = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
  len = std::min<long>(len, static_cast<long>(prec) - val);
  if (len <= 0) return PowerSeries::zero(prec);
  std::vector<Rat> out(static_cast<size_t>(len));
  for (size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size() && static_cast<long>(i + j) < len; ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  }
  return PowerSeries(val, std::move(out), prec);
}

PowerSeries operator*(const Rat& s, const PowerSeries& a) {
  if (s.is_zero()) return PowerSeries::zero(a.prec_);
  PowerSeries r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.prec_ == b.prec_ && a.val_ == b.val_ && a.c_ == b.c_;
}

PowerSeries invert(const PowerSeries& a) {
  if (a.is_zero()) throw PreconditionError("insufficient precision");
  int v = a.val();
  // Exact inputs have no natural truncation; callers truncate() first when
  // they need more than 32 terms.
  int rel = a.exact() ? 32 : a.prec() - v;
  std::vector<Rat> u(static_cast<size_t>(rel));
  for (int k = 0; k < rel; ++k) u[static_cast<size_t>(k)] = a.coeff(v + k);
  std::vector<Rat> inv(static_cast<size_t>(rel));
  Rat l = u[0].inverse();
  inv[0] = l;
  for (int n = 1; n < rel; ++n) {
    Rat s;
    for (int k = 1; k <= n; ++k) s += u[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
    inv[static_cast<size_t>(n)] = -s * l;
  }
  return PowerSeries(-v, std::move(inv), -v + rel);
}

PowerSeries PowerSeries::pow(long e) const {
  if (e < 0) return invert(*this).pow(-e);
  PowerSeries result = constant(Rat(1)), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::compose(const PowerSeries& b) const {
  if (!exact() && (b.is_zero() || b.val() <= 0))
    throw PreconditionError("composition of a truncated series needs a positive-valuation argument");
  PowerSeries acc = zero();
  PowerSeries bpow = b.pow(val_);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) bpow = bpow * b;
    if (!c_[k].is_zero()) acc = acc + c_[k] * bpow;
  }
  if (!exact()) {
    long tail = static_cast<long>(prec_) * b.val();
    acc = acc.truncate(static_cast<int>(std::min<long>(tail, kExact)));
  }
  return acc;
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k] << ")*t^" << (val_ + static_cast<long>(k));
  }
  if (first) os << "0";
  if (!exact()) os << " + O(t^" << prec_ << ")";
  return os.str();
}

PowerSeries substitute(const BiPoly& p, const PowerSeries& x, const PowerSeries& y) {
  int dx = std::max(p.degree_in(Var::x), 0), dy = std::max(p.degree_in(Var::y), 0);
  std::vector<PowerSeries> xp{PowerSeries::constant(Rat(1))}, yp{PowerSeries::constant(Rat(1))};
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * x);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * y);
  PowerSeries acc = PowerSeries::zero();
  for (const auto& [m, c] : p.terms())
    acc = acc + c * (xp[static_cast<size_t>(m.i)] * yp[static_cast<size_t>(m.j)]);
  return acc;
}

}  // namespace k2forge
