#include "taut/rational.hpp"

#include <ostream>
#include <string>

#include "taut/errors.hpp"

namespace taut {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from) throw InvalidInput("empty integer string");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidInput("not a decimal integer: " + s);
  }
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidInput("zero denominator");
  return Rational(mpq_class(n, d));
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace taut
