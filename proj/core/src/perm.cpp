#include "sdesign/perm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sdesign {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation image array");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(std::span<const int> image) {
  std::vector<int> img(image.begin(), image.end());
  for (int& v : img) --v;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::to_one_based() const {
  std::vector<int> img = image_;
  for (int& v : img) ++v;
  return img;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::sign() const {
  std::vector<bool> visited(image_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(image_[j])) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> img(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) img[i] = p.image_[static_cast<std::size_t>(q.image_[i])];
  return Permutation(std::move(img));
}

MultiIndex apply(const Permutation& p, const MultiIndex& k) {
  if (p.dim() != k.dim()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<int> out(k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) out[i] = k[static_cast<std::size_t>(p(i))];
  return MultiIndex(std::move(out));
}

PointVector apply(const Permutation& p, const PointVector& x) {
  if (p.dim() != x.dim()) throw std::invalid_argument("apply: dimension mismatch");
  return x.reindexed(p.image());
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::symmetric(std::size_t d) {
  if (d < 1) throw std::invalid_argument("group degree must be >= 1");
  PermGroup g(d, Kind::symmetric);
  if (d >= 2) {
    std::vector<int> cycle(d), swap(d);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < d; ++i) cycle[i] = static_cast<int>((i + 1) % d);
    g.generators_ = {Permutation(std::move(cycle)), Permutation(std::move(swap))};
  }
  return g;
}

PermGroup PermGroup::cyclic(std::size_t d) {
  if (d < 1) throw std::invalid_argument("group degree must be >= 1");
  PermGroup g(d, Kind::cyclic);
  std::vector<int> cycle(d);
  for (std::size_t i = 0; i < d; ++i) cycle[i] = static_cast<int>((i + 1) % d);
  g.generators_ = {Permutation(std::move(cycle))};
  return g;
}

PermGroup PermGroup::generated(std::size_t d, std::vector<Permutation> generators,
                               std::uint64_t max_order) {
  if (d < 1) throw std::invalid_argument("group degree must be >= 1");
  for (const auto& p : generators) {
    if (p.dim() != d) throw std::invalid_argument("generator has wrong degree");
  }
  PermGroup g(d, Kind::generated);
  g.generators_ = std::move(generators);

  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(d);
  seen.insert(id);
  queue.push_back(id);
  g.closure_.push_back(id);
  while (!queue.empty()) {
    Permutation e = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators_) {
      Permutation next = e * gen;
      if (seen.insert(next).second) {
        if (seen.size() > max_order) {
          throw std::length_error("generated group exceeds the order cap");
        }
        g.closure_.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return g;
}

std::uint64_t PermGroup::order() const {
  switch (kind_) {
    case Kind::symmetric: {
      if (d_ > 20) throw std::overflow_error("|S_d| does not fit in 64 bits for d > 20");
      std::uint64_t n = 1;
      for (std::uint64_t i = 2; i <= d_; ++i) n *= i;
      return n;
    }
    case Kind::cyclic:
      return d_;
    case Kind::generated:
      return closure_.size();
  }
  return 0;
}

std::string PermGroup::tag() const {
  switch (kind_) {
    case Kind::symmetric: return "sym";
    case Kind::cyclic: return "cyc";
    case Kind::generated: return "gen";
  }
  return "?";
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                 std::uint64_t max_order) const {
  if (kind_ == Kind::symmetric && (d_ > 20 || order() > max_order)) {
    throw std::length_error("symmetric group too large to enumerate");
  }
  if (order() > max_order) throw std::length_error("group exceeds the enumeration cap");
  switch (kind_) {
    case Kind::symmetric: {
      std::vector<int> img(d_);
      std::iota(img.begin(), img.end(), 0);
      do {
        fn(Permutation(img));
      } while (std::next_permutation(img.begin(), img.end()));
      break;
    }
    case Kind::cyclic: {
      std::vector<int> img(d_);
      for (std::size_t s = 0; s < d_; ++s) {
        for (std::size_t i = 0; i < d_; ++i) img[i] = static_cast<int>((i + s) % d_);
        fn(Permutation(img));
      }
      break;
    }
    case Kind::generated:
      for (const auto& p : closure_) fn(p);
      break;
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t max_order) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& p) { out.push_back(p); }, max_order);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<MultiIndex> orbit(const PermGroup& g, const MultiIndex& k, std::uint64_t max_order) {
  if (g.dim() != k.dim()) throw std::invalid_argument("orbit: dimension mismatch");
  if (g.kind() == PermGroup::Kind::symmetric) return full_orbit(k);
  std::set<MultiIndex, std::greater<>> images;
  g.for_each_element([&](const Permutation& p) { images.insert(apply(p, k)); }, max_order);
  return {images.begin(), images.end()};
}

std::vector<MultiIndex> full_orbit(const MultiIndex& k) {
  std::vector<int> e(k.exponents().begin(), k.exponents().end());
  std::sort(e.begin(), e.end(), std::greater<>());
  std::vector<MultiIndex> out;
  do {
    out.emplace_back(e);
  } while (std::prev_permutation(e.begin(), e.end()));
  return out;
}

bool is_G_invariant(const PermGroup& g, const MultiIndex& k, std::uint64_t max_order) {
  if (g.dim() != k.dim()) throw std::invalid_argument("is_G_invariant: dimension mismatch");
  if (k.dim() > 10) throw std::length_error("S_d orbit comparison refused above d = 10");
  return orbit(g, k, max_order).size() == full_orbit(k).size();
}

std::vector<Permutation> coset_representatives(const PermGroup& g, std::uint64_t max_order) {
  auto d = g.dim();
  auto sym = PermGroup::symmetric(d);
  auto members = g.elements(max_order);
  std::set<Permutation> covered;
  std::vector<Permutation> reps;
  sym.for_each_element(
      [&](const Permutation& p) {
        if (covered.contains(p)) return;
        reps.push_back(p);
        for (const auto& h : members) covered.insert(p * h);
      },
      max_order);
  return reps;
}

PermGroup parse_group(std::string_view spec, std::size_t d) {
  if (spec == "sym" || spec == "symmetric") return PermGroup::symmetric(d);
  if (spec == "cyc" || spec == "cyclic") return PermGroup::cyclic(d);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::parse_error&) {
    throw std::invalid_argument("unknown group spec: " + std::string(spec));
  }
  if (j.is_object() && j.contains("generators")) j = j["generators"];
  if (!j.is_array()) throw std::invalid_argument("group generators must be an array");
  std::vector<Permutation> gens;
  for (const auto& row : j) {
    auto img = row.get<std::vector<int>>();
    gens.push_back(Permutation::from_one_based(img));
  }
  return PermGroup::generated(d, std::move(gens));
}

}  // namespace sdesign
