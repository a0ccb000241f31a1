#pragma once

#include "sdesign/scalar.hpp"

#include <span>
#include <vector>

namespace sdesign {

enum class ScalarMode { exact, floating };

/// A point of the affine hyperplane sum(x) = 1.
///
/// Exact points keep rational coordinates (and a double shadow for fast
/// evaluation). Floating points are validated to |sum - 1| <= sum_tolerance.
/// Points with a negative coordinate are pseudoprobability vectors.
class PointVector {
 public:
  static constexpr double kDefaultSumTolerance = 1e-12;

  /// Empty placeholder of dimension 0.
  PointVector() = default;

  static PointVector exact(std::vector<Rational> coordinates);
  static PointVector floating(std::vector<double> coordinates,
                              double sum_tolerance = kDefaultSumTolerance);

  std::size_t dim() const { return values_.size(); }
  ScalarMode mode() const { return exact_.empty() ? ScalarMode::floating : ScalarMode::exact; }
  bool is_exact() const { return mode() == ScalarMode::exact; }

  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  /// Throws std::logic_error for floating points.
  std::span<const Rational> exact_values() const;
  Scalar coordinate(std::size_t i) const;

  bool is_proper() const;

  /// result[i] = (*this)[source[i]]; source must be a permutation of 0..d-1.
  PointVector reindexed(std::span<const int> source) const;

  /// Equal coordinates: exact comparison when both points are exact,
  /// otherwise |x_i - y_i| <= rel_tol * max(1, |x_i|, |y_i|).
  bool approx_equal(const PointVector& other, double rel_tol = 1e-9) const;

 private:
  std::vector<double> values_;
  std::vector<Rational> exact_;
};

}  // namespace sdesign
