#pragma once

// Test-only reference computations. Nothing here calls into sdesign; the
// values are obtained by routes independent of the library implementation.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// Gauss-Legendre nodes/weights on [0, 1] by Newton iteration on P_n.
struct GaussRule {
  std::vector<double> x, w;
};

inline GaussRule gauss_legendre01(int n) {
  GaussRule r;
  for (int i = 1; i <= n; ++i) {
    double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    r.x.push_back(0.5 * (1.0 - z));
    r.w.push_back(1.0 / ((1.0 - z * z) * dp * dp));
  }
  return r;
}

// Flat-measure average of f over the simplex {x in R^d_{>=0}, sum x = 1},
// by collapsed (Duffy) coordinates x_1 = u_1, x_2 = (1-u_1) u_2, ... and a
// tensor Gauss-Legendre rule. Exact for polynomials of modest degree.
inline double simplex_average(int d, const std::function<double(const std::vector<double>&)>& f,
                              int nodes = 10) {
  auto rule = gauss_legendre01(nodes);
  const int dims = d - 1;
  std::vector<int> idx(static_cast<std::size_t>(dims), 0);
  double total = 0.0;
  std::vector<double> x(static_cast<std::size_t>(d));
  while (true) {
    double remaining = 1.0, jac = 1.0, w = 1.0;
    for (int j = 0; j < dims; ++j) {
      double u = rule.x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      w *= rule.w[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      x[static_cast<std::size_t>(j)] = remaining * u;
      jac *= remaining;
      remaining *= (1.0 - u);
    }
    x[static_cast<std::size_t>(dims)] = remaining;
    total += w * jac * f(x);
    int j = 0;
    while (j < dims && ++idx[static_cast<std::size_t>(j)] == nodes) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == dims) break;
  }
  double fact = 1.0;
  for (int i = 2; i < d; ++i) fact *= i;
  return total * fact;
}

inline double monomial(const std::vector<double>& x, const std::vector<int>& k) {
  double v = 1.0;
  for (std::size_t i = 0; i < k.size(); ++i) v *= std::pow(x[i], k[i]);
  return v;
}

// Uniform random point of the simplex (normalized exponentials).
inline std::vector<double> random_simplex_point(int d, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(static_cast<std::size_t>(d));
  double s = 0.0;
  for (auto& v : x) s += (v = e(rng));
  for (auto& v : x) v /= s;
  double tail = 1.0;
  for (int i = 0; i + 1 < d; ++i) tail -= x[static_cast<std::size_t>(i)];
  x.back() = tail;
  return x;
}

}  // namespace oracle
