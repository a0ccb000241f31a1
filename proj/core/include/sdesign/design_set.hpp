#pragma once

#include "sdesign/perm.hpp"
#include "sdesign/point.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sdesign {

/// One element of an expanded orbit design together with the group element
/// that produced it.
struct LabeledPoint {
  PointVector point;
  std::size_t base_index;
  Permutation perm;
};

struct WeightedPoint {
  PointVector point;
  std::size_t multiplicity;
};

/// A finite multiset of points on the hyperplane sum(x) = 1, given either
/// explicitly or as the union of G-orbits of base points. Orbit expansion
/// keeps duplicates, so |X| = s * |G|.
class DesignSet {
 public:
  static constexpr std::uint64_t kDefaultExpansionCap = 1'000'000;

  static DesignSet explicit_points(std::vector<PointVector> points);
  static DesignSet orbit(std::vector<PointVector> base_points, PermGroup group);

  std::size_t dim() const { return d_; }
  bool is_orbit() const { return group_.has_value(); }
  /// Explicit points, or the base points of an orbit design.
  const std::vector<PointVector>& points() const { return points_; }
  const std::optional<PermGroup>& group() const { return group_; }
  bool is_exact() const;
  bool is_proper() const;

  /// Multiset size including multiplicity.
  std::uint64_t size() const;

  std::vector<PointVector> expand(std::uint64_t cap = kDefaultExpansionCap) const;
  std::vector<LabeledPoint> expand_labeled(std::uint64_t cap = kDefaultExpansionCap) const;
  /// Distinct points with their multiplicities, first-occurrence order.
  std::vector<WeightedPoint> dedup(std::uint64_t cap = kDefaultExpansionCap,
                                   double rel_tol = 1e-9) const;

 private:
  DesignSet(std::size_t d, std::vector<PointVector> points, std::optional<PermGroup> group)
      : d_(d), points_(std::move(points)), group_(std::move(group)) {}

  std::size_t d_;
  std::vector<PointVector> points_;
  std::optional<PermGroup> group_;
};

}  // namespace sdesign
