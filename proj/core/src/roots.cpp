#include "sdesign/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdesign {

double evaluate_polynomial(std::span<const double> coeffs, double x) {
  double v = 0.0;
  for (double c : coeffs) v = v * x + c;
  return v;
}

namespace {

double evaluate_derivative(std::span<const double> coeffs, double x) {
  double v = 0.0;
  const auto n = coeffs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v = v * x + coeffs[i] * static_cast<double>(n - 1 - i);
  }
  return v;
}

std::vector<double> trim_leading(std::span<const double> coeffs) {
  std::size_t i = 0;
  while (i < coeffs.size() && coeffs[i] == 0.0) ++i;
  return {coeffs.begin() + static_cast<std::ptrdiff_t>(i), coeffs.end()};
}

}  // namespace

std::vector<double> real_roots_companion(std::span<const double> coeffs, double imag_tol) {
  auto c = trim_leading(coeffs);
  if (c.size() < 2) return {};
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -c[static_cast<std::size_t>(j + 1)] / c[0];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solve failed");
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < n; ++i) {
    auto lambda = solver.eigenvalues()[i];
    if (std::fabs(lambda.imag()) > imag_tol * std::max(1.0, std::abs(lambda))) continue;
    double x = lambda.real();
    for (int it = 0; it < 3; ++it) {
      double df = evaluate_derivative(c, x);
      if (df == 0.0) break;
      double step = evaluate_polynomial(c, x) / df;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> real_roots_bracketed(std::span<const double> coeffs, double lo, double hi,
                                         int subdivisions) {
  auto c = trim_leading(coeffs);
  if (c.size() < 2) return {};
  if (!(hi > lo) || subdivisions < 1) throw std::invalid_argument("bad bracketing interval");
  std::vector<double> roots;
  const double h = (hi - lo) / subdivisions;
  double a = lo;
  double fa = evaluate_polynomial(c, a);
  for (int i = 1; i <= subdivisions; ++i) {
    double b = (i == subdivisions) ? hi : lo + h * i;
    double fb = evaluate_polynomial(c, b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if (fa * fb < 0.0) {
      double l = a, r = b, fl = fa;
      double x = 0.5 * (l + r);
      for (int it = 0; it < 200 && r - l > 1e-15; ++it) {
        double fx = evaluate_polynomial(c, x);
        if (fx == 0.0) { l = r = x; break; }
        if ((fx < 0.0) == (fl < 0.0)) { l = x; fl = fx; } else { r = x; }
        double df = evaluate_derivative(c, x);
        double newton = df != 0.0 ? x - fx / df : l - 1.0;
        x = (newton > l && newton < r) ? newton : 0.5 * (l + r);
        if (std::fabs(fx) < 1e-300) break;
      }
      roots.push_back(l == r ? l : x);
    }
    a = b;
    fa = fb;
  }
  if (evaluate_polynomial(c, hi) == 0.0 &&
      (roots.empty() || roots.back() != hi)) {
    roots.push_back(hi);
  }
  return roots;
}

}  // namespace sdesign
