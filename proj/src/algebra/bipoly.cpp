#include "k2forge/algebra/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "k2forge/error.hpp"

namespace k2forge {

BiPoly::BiPoly(Terms terms) : t_(std::move(terms)) {
  std::erase_if(t_, [](const auto& kv) { return kv.second.is_zero(); });
}

BiPoly::BiPoly(const Rat& c) {
  if (!c.is_zero()) t_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(Monomial{i, j}, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var v) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    Rat c = p.coeff(k);
    if (c.is_zero()) continue;
    out.t_.emplace(v == Var::x ? Monomial{k, 0} : Monomial{0, k}, c);
  }
  return out;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& coeffs) {
  BiPoly out;
  for (size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i) {
      Rat c = coeffs[j].coeff(i);
      if (!c.is_zero()) out.t_.emplace(Monomial{i, static_cast<int>(j)}, c);
    }
  return out;
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0});
}

Rat BiPoly::constant_term() const { return coeff(0, 0); }

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find(Monomial{i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i + m.j);
  return d;
}

int BiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, v == Var::x ? m.i : m.j);
  return d;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  // Horner in y over Horner-in-x coefficients.
  auto cs = coeffs_in(Var::y);
  Rat acc;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * y + it->eval(x);
  return acc;
}

double BiPoly::eval_double(double x, double y) const {
  double acc = 0;
  for (const auto& [m, c] : t_) acc += c.to_double() * std::pow(x, m.i) * std::pow(y, m.j);
  return acc;
}

BiPoly BiPoly::diff(Var v) const {
  BiPoly out;
  for (const auto& [m, c] : t_) {
    int e = v == Var::x ? m.i : m.j;
    if (e == 0) continue;
    Monomial n = v == Var::x ? Monomial{m.i - 1, m.j} : Monomial{m.i, m.j - 1};
    out.t_[n] += c * Rat(e);
  }
  std::erase_if(out.t_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::substitute(const BiPoly& X, const BiPoly& Y) const {
  int dx = std::max(degree_in(Var::x), 0), dy = std::max(degree_in(Var::y), 0);
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * X);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * Y);
  BiPoly out;
  for (const auto& [m, c] : t_) out += BiPoly(c) * xp[static_cast<size_t>(m.i)] * yp[static_cast<size_t>(m.j)];
  return out;
}

BiPoly BiPoly::translate(const Rat& dx, const Rat& dy) const {
  return substitute(x() + BiPoly(dx), y() + BiPoly(dy));
}

BiPoly BiPoly::swap_vars() const {
  BiPoly out;
  for (const auto& [m, c] : t_) out.t_.emplace(Monomial{m.j, m.i}, c);
  return out;
}

UniPoly BiPoly::restrict(Var v, const Rat& value) const {
  auto cs = coeffs_in(v == Var::x ? Var::y : Var::x);
  std::vector<Rat> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.eval(value));
  return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::coeffs_in(Var v) const {
  int d = degree_in(v);
  if (d < 0) return {};
  std::vector<std::vector<Rat>> raw(static_cast<size_t>(d) + 1);
  for (const auto& [m, c] : t_) {
    int k = v == Var::x ? m.i : m.j;
    int o = v == Var::x ? m.j : m.i;
    auto& slot = raw[static_cast<size_t>(k)];
    if (static_cast<int>(slot.size()) <= o) slot.resize(static_cast<size_t>(o) + 1);
    slot[static_cast<size_t>(o)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BiPoly BiPoly::divide_by_y_power(int k) const {
  BiPoly out;
  for (const auto& [m, c] : t_) {
    if (m.j < k) throw InternalError("polynomial is not divisible by y^" + std::to_string(k));
    out.t_.emplace(Monomial{m.i, m.j - k}, c);
  }
  return out;
}

BiPoly BiPoly::homogeneous_part(int k) const {
  BiPoly out;
  for (const auto& [m, c] : t_)
    if (m.i + m.j == k) out.t_.emplace(m, c);
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out(*this);
  for (auto& [m, c] : out.t_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.t_) {
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) out.t_[Monomial{ma.i + mb.i, ma.j + mb.j}] += ca * cb;
  std::erase_if(out.t_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string BiPoly::str(char xv, char yv) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Monomial, Rat>> order(t_.begin(), t_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = a.first.i + a.first.j, db = b.first.i + b.first.j;
    if (da != db) return da > db;
    return a.first.j > b.first.j;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : order) {
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = m.i == 0 && m.j == 0;
    bool wrote = false;
    if (!a.is_one() || is_const) {
      if (a.is_integer()) os << a;
      else os << "(" << a << ")";
      wrote = true;
    }
    auto put = [&](char v, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    put(xv, m.i);
    put(yv, m.j);
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiPoly parse() {
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("cannot parse polynomial '" + s_ + "': " + what + " at offset " +
                            std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  BiPoly expr() {
    BiPoly acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    BiPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  BiPoly term() {
    BiPoly acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        BiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc = acc * BiPoly(d.constant_term().inverse());
      } else {
        break;
      }
    }
    return acc;
  }
  BiPoly power() {
    BiPoly base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  BiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return BiPoly::x();
    }
    if (c == 'y' || c == 'Y') {
      ++pos_;
      return BiPoly::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return BiPoly(Rat::parse(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(const std::string& text) { return Parser(text).parse(); }

}  // namespace k2forge
