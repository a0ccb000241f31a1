#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace sdesign {

// Reduced fraction with arbitrary-precision numerator and denominator.
// Division by zero throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

BigInt factorial(unsigned n);

/// A value that is either exact (rational) or an IEEE double.
///
/// Arithmetic between two exact values stays exact; any double operand
/// turns the result into a double.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double x) : value_(x) {}               // NOLINT(google-explicit-constructor)
  Scalar(int x) : value_(Rational(x)) {}        // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double to_double() const;

  bool is_zero() const;
  Scalar abs() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact values render as "p/q"; doubles with 17 significant digits.
  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

/// Fixed 17-significant-digit rendering used by every JSON/CSV writer.
std::string format_double(double x);

}  // namespace sdesign
