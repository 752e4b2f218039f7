#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vtangle {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q" or an integer literal. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace vtangle
