#include "shlie3/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace shlie3 {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw std::domain_error("rational '" + std::string(text) + "' has zero denominator");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
  return *this;
}
Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_zero(const Coords& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void add_scaled(Coords& acc, const Rational& c, const Coords& v) {
  if (acc.size() != v.size()) throw std::invalid_argument("coordinate length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

Coords operator+(const Coords& a, const Coords& b) {
  Coords r = a;
  add_scaled(r, 1, b);
  return r;
}
Coords operator-(const Coords& a, const Coords& b) {
  Coords r = a;
  add_scaled(r, -1, b);
  return r;
}
Coords operator*(const Rational& c, const Coords& v) {
  Coords r(v.size());
  add_scaled(r, c, v);
  return r;
}
Coords operator-(const Coords& v) { return Rational(-1) * v; }

std::string to_string(const Coords& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace shlie3
