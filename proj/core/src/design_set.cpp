#include "sdesign/design_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdesign {

namespace {

std::size_t common_dim(const std::vector<PointVector>& pts) {
  if (pts.empty()) throw std::invalid_argument("design needs at least one point");
  std::size_t d = pts.front().dim();
  for (const auto& p : pts) {
    if (p.dim() != d) throw std::invalid_argument("design points have mixed dimensions");
  }
  return d;
}

}  // namespace

DesignSet DesignSet::explicit_points(std::vector<PointVector> points) {
  auto d = common_dim(points);
  return DesignSet(d, std::move(points), std::nullopt);
}

DesignSet DesignSet::orbit(std::vector<PointVector> base_points, PermGroup group) {
  auto d = common_dim(base_points);
  if (group.dim() != d) throw std::invalid_argument("group degree does not match point dimension");
  return DesignSet(d, std::move(base_points), std::move(group));
}

bool DesignSet::is_exact() const {
  return std::all_of(points_.begin(), points_.end(), [](const PointVector& p) { return p.is_exact(); });
}

bool DesignSet::is_proper() const {
  // every orbit member is a rearrangement of a base point
  return std::all_of(points_.begin(), points_.end(), [](const PointVector& p) { return p.is_proper(); });
}

std::uint64_t DesignSet::size() const {
  if (!group_) return points_.size();
  return points_.size() * group_->order();
}

std::vector<LabeledPoint> DesignSet::expand_labeled(std::uint64_t cap) const {
  std::vector<LabeledPoint> out;
  if (!group_) {
    auto id = Permutation::identity(d_);
    for (std::size_t i = 0; i < points_.size(); ++i) out.push_back({points_[i], i, id});
    return out;
  }
  if (group_->kind() == PermGroup::Kind::symmetric && d_ > 20) {
    throw std::length_error("expansion cap exceeded");
  }
  if (size() > cap) throw std::length_error("expansion cap exceeded");
  auto elems = group_->elements(cap);
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (const auto& p : elems) out.push_back({apply(p, points_[i]), i, p});
  }
  return out;
}

std::vector<PointVector> DesignSet::expand(std::uint64_t cap) const {
  if (!group_) return points_;
  std::vector<PointVector> out;
  for (auto& lp : expand_labeled(cap)) out.push_back(std::move(lp.point));
  return out;
}

std::vector<WeightedPoint> DesignSet::dedup(std::uint64_t cap, double rel_tol) const {
  std::vector<WeightedPoint> out;
  for (auto& p : expand(cap)) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const WeightedPoint& w) { return w.point.approx_equal(p, rel_tol); });
    if (it != out.end()) {
      ++it->multiplicity;
    } else {
      out.push_back({std::move(p), 1});
    }
  }
  return out;
}

}  // namespace sdesign
