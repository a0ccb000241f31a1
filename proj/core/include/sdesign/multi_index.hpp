#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdesign {

/// Exponent vector k = (k_1, ..., k_d) of the monomial x_1^k_1 ... x_d^k_d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  std::size_t dim() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const int> exponents() const { return exponents_; }

  /// Non-increasing rearrangement (partition form).
  MultiIndex canonical() const;
  bool is_canonical() const;

  /// Adds one to coordinate j.
  MultiIndex raised(std::size_t j) const;

  /// "(2,1,0)"
  std::string to_string() const;
  /// "[2,1]" with trailing zeros dropped, the Young-diagram label.
  std::string partition_label() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

inline MultiIndex canonicalize(const MultiIndex& k) { return k.canonical(); }

/// All exponent vectors of dimension d with total degree t (exact_degree) or
/// at most t. Within one degree the order is lexicographically descending;
/// degrees are listed in ascending order.
std::vector<MultiIndex> enumerate_multi_indices(int d, int t, bool exact_degree);

/// Partitions of n with at most max_parts parts, padded with zeros to length
/// max_parts, in ascending lexicographic order ((1,1,1,1) ... (4)).
std::vector<MultiIndex> partitions(int n, int max_parts);

}  // namespace sdesign
