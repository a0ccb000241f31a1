#include "sdesign/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sdesign {

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed rational literal: " + std::string(s));
    }
  }
  // cpp_int rejects a leading '+'
  return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

const Rational& Scalar::exact() const {
  if (!is_exact()) throw std::logic_error("Scalar holds a double, not an exact value");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return sdesign::to_double(std::get<Rational>(value_));
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  if (is_exact()) return std::get<Rational>(value_) == 0;
  return std::get<double>(value_) == 0.0;
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(boost::multiprecision::abs(std::get<Rational>(value_)));
  return Scalar(std::fabs(std::get<double>(value_)));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() + b.exact()));
  return Scalar(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() - b.exact()));
  return Scalar(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
  return Scalar(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.exact() == 0) throw std::domain_error("exact division by zero");
    return Scalar(Rational(a.exact() / b.exact()));
  }
  return Scalar(a.to_double() / b.to_double());
}

std::string Scalar::to_string() const {
  if (is_exact()) return sdesign::to_string(std::get<Rational>(value_));
  return format_double(std::get<double>(value_));
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace sdesign
