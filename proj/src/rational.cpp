#include "cosys/rational.hpp"

#include <cctype>
#include <ostream>

#include "cosys/errors.hpp"

namespace cosys {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  bool neg = false;
  if (s.starts_with("-")) {
    neg = true;
    s.remove_prefix(1);
  } else if (s.starts_with("\xe2\x88\x92")) {  // U+2212 minus sign
    neg = true;
    s.remove_prefix(3);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    throw Error(ErrorKind::Parse, "bad rational: '" + std::string(s) + "'");
  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  if (neg) v = -v;
  return Rational(v);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace cosys
