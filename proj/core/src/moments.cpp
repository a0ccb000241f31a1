#include "sdesign/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace sdesign {

nlohmann::json to_json(const MomentReport& r) {
  nlohmann::json j;
  j["index"] = std::vector<int>(r.index.exponents().begin(), r.index.exponents().end());
  j["target"] = to_string(r.target);
  if (r.observed.is_exact()) {
    j["observed"] = r.observed.to_string();
    j["residual"] = r.residual.to_string();
  } else {
    j["observed"] = r.observed.to_double();
    j["residual"] = r.residual.to_double();
  }
  j["symmetrization"] = r.symmetrization;
  return j;
}

std::string csv_header_moment_report() { return "index,target,observed,residual,symmetrization"; }

std::string to_csv_row(const MomentReport& r) {
  std::string idx;
  for (std::size_t i = 0; i < r.index.dim(); ++i) {
    if (i) idx += ' ';
    idx += std::to_string(r.index[i]);
  }
  return idx + "," + to_string(r.target) + "," + r.observed.to_string() + "," +
         r.residual.to_string() + "," + r.symmetrization;
}

Rational generalized_beta(std::span<const int> alphas) {
  if (alphas.empty()) throw std::invalid_argument("generalized_beta: empty argument list");
  BigInt num = 1;
  unsigned total = 0;
  for (int a : alphas) {
    if (a < 1) throw std::invalid_argument("generalized_beta: arguments must be positive integers");
    num *= factorial(static_cast<unsigned>(a - 1));
    total += static_cast<unsigned>(a);
  }
  return Rational(num, factorial(total - 1));
}

Rational simplex_moment(const MultiIndex& k) {
  auto d = static_cast<unsigned>(k.dim());
  BigInt num = factorial(d - 1);
  for (int e : k.exponents()) num *= factorial(static_cast<unsigned>(e));
  return Rational(num, factorial(d - 1 + static_cast<unsigned>(k.degree())));
}

Rational power_sum_target(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("power_sum_target: need n >= 1, k >= 0");
  auto un = static_cast<unsigned>(n);
  auto uk = static_cast<unsigned>(k);
  return Rational(factorial(un - 1) * factorial(uk), factorial(un + uk - 1));
}

Scalar monomial_value(const PointVector& p, const MultiIndex& k) {
  if (p.dim() != k.dim()) throw std::invalid_argument("monomial_value: dimension mismatch");
  if (p.is_exact()) {
    Rational v = 1;
    auto xs = p.exact_values();
    for (std::size_t i = 0; i < k.dim(); ++i) {
      for (int e = 0; e < k[i]; ++e) v *= xs[i];
    }
    return Scalar(std::move(v));
  }
  double v = 1.0;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    if (k[i]) v *= std::pow(p[i], k[i]);
  }
  return Scalar(v);
}

Scalar monomial_average(std::span<const PointVector> points, const MultiIndex& k) {
  if (points.empty()) throw std::invalid_argument("monomial_average: empty design");
  bool exact = true;
  for (const auto& p : points) exact = exact && p.is_exact();
  if (exact) {
    Rational sum = 0;
    for (const auto& p : points) sum += monomial_value(p, k).exact();
    return Scalar(Rational(sum / points.size()));
  }
  double sum = 0.0;
  for (const auto& p : points) sum += monomial_value(p, k).to_double();
  return Scalar(sum / static_cast<double>(points.size()));
}

Scalar monomial_average(const DesignSet& x, const MultiIndex& k, std::uint64_t cap) {
  if (x.dim() != k.dim()) throw std::invalid_argument("monomial_average: dimension mismatch");
  auto pts = x.expand(cap);
  return monomial_average(pts, k);
}

Scalar symmetrized_average(std::span<const PointVector> points, const MultiIndex& k,
                           const PermGroup& g) {
  Scalar total = 0;
  g.for_each_element([&](const Permutation& p) { total += monomial_average(points, apply(p, k)); });
  return total;
}

Scalar symmetrized_average(const DesignSet& x, const MultiIndex& k, const PermGroup& g,
                           std::uint64_t cap) {
  if (x.dim() != k.dim() || g.dim() != k.dim()) {
    throw std::invalid_argument("symmetrized_average: dimension mismatch");
  }
  auto pts = x.expand(cap);
  return symmetrized_average(pts, k, g);
}

}  // namespace sdesign
