#pragma once

#include "sdesign/multi_index.hpp"
#include "sdesign/point.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sdesign {

/// A permutation of {0, ..., d-1}, stored as its image array.
///
/// Composition: (p * q)(i) = p(q(i)).
/// Action on sequences: apply(p, k)[i] = k[p(i)], so that
/// apply(p * q, k) == apply(q, apply(p, k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(std::size_t d);
  /// From a 1-indexed image array such as [2,3,1].
  static Permutation from_one_based(std::span<const int> image);

  std::size_t dim() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i]; }
  std::span<const int> image() const { return image_; }
  std::vector<int> to_one_based() const;

  bool is_identity() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

MultiIndex apply(const Permutation& p, const MultiIndex& k);
PointVector apply(const Permutation& p, const PointVector& x);

/// A subgroup of S_d: the full symmetric group, the cyclic group generated
/// by i -> i+1 (mod d), or the closure of a list of generators.
class PermGroup {
 public:
  enum class Kind { symmetric, cyclic, generated };

  /// Element enumeration refuses groups larger than this (10!).
  static constexpr std::uint64_t kDefaultMaxOrder = 3628800;

  static PermGroup symmetric(std::size_t d);
  static PermGroup cyclic(std::size_t d);
  /// Closes the generators under composition by breadth-first search.
  /// Throws std::length_error when the closure exceeds max_order elements.
  static PermGroup generated(std::size_t d, std::vector<Permutation> generators,
                             std::uint64_t max_order = kDefaultMaxOrder);

  std::size_t dim() const { return d_; }
  Kind kind() const { return kind_; }
  /// Throws std::overflow_error for S_d with d > 20.
  std::uint64_t order() const;
  const std::vector<Permutation>& generators() const { return generators_; }

  /// "sym", "cyc" or "gen".
  std::string tag() const;

  /// Every element exactly once, identity first, deterministic order.
  /// Throws std::length_error if |G| exceeds max_order.
  std::vector<Permutation> elements(std::uint64_t max_order = kDefaultMaxOrder) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t max_order = kDefaultMaxOrder) const;

 private:
  PermGroup(std::size_t d, Kind kind) : d_(d), kind_(kind) {}

  std::size_t d_ = 0;
  Kind kind_ = Kind::symmetric;
  std::vector<Permutation> generators_;
  std::vector<Permutation> closure_;  // generated groups only
};

/// Distinct images {p(k) : p in G}, sorted lexicographically descending.
std::vector<MultiIndex> orbit(const PermGroup& g, const MultiIndex& k,
                              std::uint64_t max_order = PermGroup::kDefaultMaxOrder);

/// Distinct rearrangements of k (the S_d-orbit) without enumerating S_d.
std::vector<MultiIndex> full_orbit(const MultiIndex& k);

/// True iff the G-orbit of k equals its S_d-orbit.
bool is_G_invariant(const PermGroup& g, const MultiIndex& k,
                    std::uint64_t max_order = PermGroup::kDefaultMaxOrder);

/// One representative per left coset pG of G in S_d, identity first.
std::vector<Permutation> coset_representatives(
    const PermGroup& g, std::uint64_t max_order = PermGroup::kDefaultMaxOrder);

/// Parses "sym", "cyc", or a JSON array of 1-indexed generators such as
/// "[[2,1,3]]".
PermGroup parse_group(std::string_view spec, std::size_t d);

}  // namespace sdesign
