#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace cosys {

// Exact rational, always stored reduced with positive denominator.
// Thin wrapper over GMP's mpq_class adding the "p/q" text form and
// checked division (GMP itself raises SIGFPE on division by zero).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}             // NOLINT: implicit by design
  Rational(long num, long den);           // throws DivisionByZero if den == 0
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // "p/q" or "p"; optional leading '-' (ASCII or U+2212).
  static Rational parse(std::string_view s);
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// -1 / 0 / +1 as a < b, a = b, a > b.
inline int compare(const Rational& a, const Rational& b) {
  return cmp(a.raw(), b.raw());
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cosys
