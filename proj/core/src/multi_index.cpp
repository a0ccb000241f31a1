#include "sdesign/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sdesign {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("MultiIndex needs d >= 1");
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("MultiIndex exponents must be non-negative");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::canonical() const {
  std::vector<int> sorted = exponents_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return MultiIndex(std::move(sorted));
}

bool MultiIndex::is_canonical() const {
  return std::is_sorted(exponents_.begin(), exponents_.end(), std::greater<>());
}

MultiIndex MultiIndex::raised(std::size_t j) const {
  std::vector<int> e = exponents_;
  ++e.at(j);
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents_[i]);
  }
  return s + ")";
}

std::string MultiIndex::partition_label() const {
  auto c = canonical();
  std::string s = "[";
  bool first = true;
  for (int e : c.exponents()) {
    if (e == 0) break;
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "]";
}

namespace {

// Lexicographically descending compositions of `remaining` into the
// positions [pos, d).
void compositions(std::vector<int>& cur, std::size_t pos, int remaining,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(cur, pos + 1, remaining - v, out);
  }
}

void partitions_rec(std::vector<int>& cur, int remaining, int max_part,
                    std::size_t max_parts, std::vector<MultiIndex>& out) {
  if (remaining == 0) {
    std::vector<int> padded = cur;
    padded.resize(max_parts, 0);
    out.emplace_back(std::move(padded));
    return;
  }
  if (cur.size() == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(cur, remaining - p, p, max_parts, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int d, int t, bool exact_degree) {
  if (d < 1) throw std::invalid_argument("enumerate_multi_indices: d must be >= 1");
  if (t < 0) throw std::invalid_argument("enumerate_multi_indices: t must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  for (int deg = exact_degree ? t : 0; deg <= t; ++deg) {
    compositions(cur, 0, deg, out);
  }
  return out;
}

std::vector<MultiIndex> partitions(int n, int max_parts) {
  if (n < 0 || max_parts < 1) throw std::invalid_argument("partitions: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  partitions_rec(cur, n, n, static_cast<std::size_t>(max_parts), out);
  // generated in descending lex order
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace sdesign
