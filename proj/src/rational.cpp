#include "annlab/rational.hpp"

#include <cctype>

#include "annlab/error.hpp"

namespace annlab {

Rational::Rational(long p, long q) {
  if (q == 0) throw DivisionByZero();
  q_ = mpq_class(p, q);
  q_.canonicalize();
}

Rational::Rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DivisionByZero();
  q_ = mpq_class(p, q);
  q_.canonicalize();
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view p = text.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(p) || !all_digits(q) || q[0] == '-' || q[0] == '+')
    throw ParseError("bad rational '" + std::string(text) + "'");
  std::string ps(p[0] == '+' ? p.substr(1) : p);
  BigInt num(ps, 10), den(std::string(q), 10);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw ValidationError("valuation of zero");
  BigInt m = n;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation(const Rational& r, const BigInt& p) {
  return valuation(r.num(), p) - valuation(r.den(), p);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace annlab
