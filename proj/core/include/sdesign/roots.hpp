#pragma once

#include <span>
#include <vector>

namespace sdesign {

// Coefficients are ordered from the leading term down:
// {c_n, ..., c_1, c_0} for c_n x^n + ... + c_0.

double evaluate_polynomial(std::span<const double> coeffs, double x);

/// Real eigenvalues of the companion matrix (imaginary part below
/// imag_tol * max(1, |lambda|)), polished by a few Newton steps, ascending.
std::vector<double> real_roots_companion(std::span<const double> coeffs, double imag_tol = 1e-7);

/// Sign changes on a uniform grid of `subdivisions` cells over [lo, hi],
/// refined by safeguarded Newton/bisection to |interval| <= 1e-15. Roots of
/// even multiplicity without a sign change are not found. Ascending.
std::vector<double> real_roots_bracketed(std::span<const double> coeffs, double lo, double hi,
                                         int subdivisions = 4096);

}  // namespace sdesign
