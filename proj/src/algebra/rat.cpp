#include "k2forge/algebra/rat.hpp"

#include <cctype>
#include <ostream>

#include "k2forge/error.hpp"

namespace k2forge {

Rat::Rat(long n, long d) : v_(n, d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  v_.get_num() = n;
  v_.get_den() = d;
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r;
  r.v_.get_num() = n;
  r.v_.get_den() = d;  // already coprime
  return r;
}

std::string Rat::str() const { return v_.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rat out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw PreconditionError("malformed rational '" + std::string(text) + "'");
    out = Rat(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw PreconditionError("malformed decimal '" + std::string(text) + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    mpz_class num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    out = Rat(num, den);
  } else {
    if (!all_digits(s)) throw PreconditionError("malformed rational '" + std::string(text) + "'");
    out = Rat(mpz_class(std::string(s), 10));
  }
  return neg ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace k2forge
