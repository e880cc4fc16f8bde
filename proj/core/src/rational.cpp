// rational.cpp

#include "sphunit/rational.hpp"

#include <functional>
#include <ostream>

#include "sphunit/errors.hpp"

namespace sphunit {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  std::string digits(s.substr(i));
  out.set_str(digits, 10);
  if (s[0] == '-') out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("zero_denominator", "zero denominator");
  q_ = mpq_class(n, 1) / mpq_class(d, 1);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw DomainError("zero_denominator", "zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  mpz_class n, d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, n)) throw DomainError("bad_token", "malformed rational '" + std::string(text) + "'");
  } else {
    std::string_view ds = s.substr(slash + 1);
    if (!parse_integer(s.substr(0, slash), n) || ds.empty() || ds[0] == '-' || ds[0] == '+' ||
        !parse_integer(ds, d))
      throw DomainError("bad_token", "malformed rational '" + std::string(text) + "'");
    if (d == 0) throw DomainError("zero_denominator", "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::frac() const { return *this - Rational(mpq_class(floor())); }

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw DomainError("not_integer", "expected a machine integer, got " + str());
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division_by_zero", "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t RationalHash::operator()(const Rational& r) const {
  return std::hash<std::string>{}(r.str());
}

}  // namespace sphunit
