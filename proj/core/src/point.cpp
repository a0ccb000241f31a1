#include "sdesign/point.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdesign {

PointVector PointVector::exact(std::vector<Rational> coordinates) {
  if (coordinates.empty()) throw std::invalid_argument("point needs d >= 1");
  Rational sum = 0;
  for (const auto& c : coordinates) sum += c;
  if (sum != 1) {
    throw std::invalid_argument("exact point coordinates sum to " + to_string(sum) +
                                ", expected 1");
  }
  PointVector p;
  p.values_.reserve(coordinates.size());
  for (const auto& c : coordinates) p.values_.push_back(to_double(c));
  p.exact_ = std::move(coordinates);
  return p;
}

PointVector PointVector::floating(std::vector<double> coordinates, double sum_tolerance) {
  if (coordinates.empty()) throw std::invalid_argument("point needs d >= 1");
  double sum = 0.0;
  for (double c : coordinates) {
    if (!std::isfinite(c)) throw std::invalid_argument("point coordinate is not finite");
    sum += c;
  }
  if (std::fabs(sum - 1.0) > sum_tolerance) {
    throw std::invalid_argument("point coordinates sum to " + format_double(sum) +
                                ", expected 1");
  }
  PointVector p;
  p.values_ = std::move(coordinates);
  return p;
}

std::span<const Rational> PointVector::exact_values() const {
  if (!is_exact()) throw std::logic_error("point is in floating mode");
  return exact_;
}

Scalar PointVector::coordinate(std::size_t i) const {
  if (is_exact()) return Scalar(exact_[i]);
  return Scalar(values_[i]);
}

bool PointVector::is_proper() const {
  if (is_exact()) {
    return std::all_of(exact_.begin(), exact_.end(), [](const Rational& c) { return c >= 0; });
  }
  return std::all_of(values_.begin(), values_.end(), [](double c) { return c >= 0.0; });
}

PointVector PointVector::reindexed(std::span<const int> source) const {
  if (source.size() != dim()) throw std::invalid_argument("permutation dimension mismatch");
  PointVector p;
  p.values_.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) p.values_[i] = values_[static_cast<std::size_t>(source[i])];
  if (is_exact()) {
    p.exact_.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) p.exact_[i] = exact_[static_cast<std::size_t>(source[i])];
  }
  return p;
}

bool PointVector::approx_equal(const PointVector& other, double rel_tol) const {
  if (dim() != other.dim()) return false;
  if (is_exact() && other.is_exact()) return exact_ == other.exact_;
  for (std::size_t i = 0; i < dim(); ++i) {
    double scale = std::max({1.0, std::fabs(values_[i]), std::fabs(other.values_[i])});
    if (std::fabs(values_[i] - other.values_[i]) > rel_tol * scale) return false;
  }
  return true;
}

}  // namespace sdesign
