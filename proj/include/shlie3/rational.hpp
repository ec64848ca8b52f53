#pragma once

#include <gmpxx.h>

#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace shlie3 {

// Exact rational number. Always canonical (lowest terms, positive denominator);
// a zero denominator can never be constructed.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit on purpose
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on bad text
  // and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return mpq_sgn(value_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(value_.get_mpq_t()); }
  Rational inverse() const;
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

// a coordinate vector in one degree
using Coords = std::vector<Rational>;

bool is_zero(const Coords& v);
void add_scaled(Coords& acc, const Rational& c, const Coords& v);
Coords operator+(const Coords& a, const Coords& b);
Coords operator-(const Coords& a, const Coords& b);
Coords operator*(const Rational& c, const Coords& v);
Coords operator-(const Coords& v);
std::string to_string(const Coords& v);

}  // namespace shlie3
