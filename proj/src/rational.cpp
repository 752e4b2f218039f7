#include "vtangle/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vtangle {

namespace {

Rational::Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  Rational::Integer value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Rational::Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  // cpp_rational rejects a negative denominator outright
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), Integer(1));
  }
  auto num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  auto den = parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational::Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }
Rational::Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
  if (is_integer()) {
    return numerator().str();
  }
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace vtangle
