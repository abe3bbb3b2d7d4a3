#include "k2forge/algebra/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "k2forge/error.hpp"

namespace k2forge {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

const Rat& UniPoly::lead() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat UniPoly::eval(const Rat& at) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = UniPoly::constant(Rat(1)), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rat inv = lead().inverse();
  return inv * *this;
}

int UniPoly::low_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& s, const UniPoly& p) {
  if (s.is_zero()) return {};
  std::vector<Rat> v(p.c_);
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rat> rem(c_);
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rat> quo(static_cast<size_t>(degree() - dd) + 1);
  Rat inv = divisor.lead().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + dd)] * inv;
    quo[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * divisor.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a.is_one() && i > 0;
    if (!unit) {
      if (a.is_integer()) os << a;
      else os << "(" << a << ")";
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

int root_multiplicity(const UniPoly& p, const Rat& r) {
  if (p.is_zero()) throw PreconditionError("root multiplicity of the zero polynomial");
  UniPoly lin = UniPoly::linear_root(r);
  UniPoly cur = p;
  int m = 0;
  for (;;) {
    auto [q, rem] = cur.divmod(lin);
    if (!rem.is_zero()) return m;
    ++m;
    cur = std::move(q);
  }
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rat& at) {
  int prev = 0, changes = 0;
  for (const auto& q : seq) {
    int s = q.eval(at).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Integer-coefficient primitive multiple of p.
UniPoly clear_denominators(const UniPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
  return Rat(den) * p;
}

Rat cauchy_bound(const UniPoly& p) {
  Rat m;
  Rat lc = p.lead().abs();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lc);
  return m + Rat(1);
}

}  // namespace

int count_real_roots(const UniPoly& p, const Rat& lo, const Rat& hi) {
  UniPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto seq = sturm_sequence(sf);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::vector<Rat> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  std::vector<Rat> roots;
  UniPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return roots;
  if (sf.coeff(0).is_zero()) {
    roots.emplace_back(0);
    sf = sf / UniPoly::x();
  }
  if (sf.degree() <= 0) return roots;
  UniPoly ip = clear_denominators(sf);
  Rat lead = ip.lead().abs();
  auto seq = sturm_sequence(sf);
  Rat bound = cauchy_bound(sf);

  struct Interval {
    Rat lo, hi;
    int count;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(seq, -bound) - sign_variations(seq, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count <= 0) continue;
    if ((iv.hi - iv.lo) * lead < Rat(1)) {
      // a rational root u/v has v | lead, so lead * root is an integer
      Rat lo = iv.lo * lead, hi = iv.hi * lead;
      mpz_class k;
      mpz_fdiv_q(k.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
      for (k += 1; Rat(k) <= hi; k += 1) {
        Rat cand = Rat(k) / lead;
        if (sf.eval(cand).is_zero()) roots.push_back(cand);
      }
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / Rat(2);
    int left = sign_variations(seq, iv.lo) - sign_variations(seq, mid);
    stack.push_back({iv.lo, mid, left});
    stack.push_back({mid, iv.hi, iv.count - left});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace k2forge
