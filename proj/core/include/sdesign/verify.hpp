#pragma once

#include "sdesign/design_set.hpp"
#include "sdesign/moments.hpp"
#include "sdesign/perm.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <vector>

namespace sdesign {

enum class Classification { proper_design, pseudodesign, not_a_design };
enum class VerifyMethod { brute_force, power_sum_criterion, g_restricted };

std::string to_string(Classification c);
std::string to_string(VerifyMethod m);

/// Absolute tolerance for floating residuals. Exact residuals must vanish.
inline constexpr double kDefaultTolerance = 1e-9;

struct VerificationResult {
  bool is_design = false;
  int t = 0;
  Scalar max_abs_residual;
  std::vector<MomentReport> reports;
  Classification classification = Classification::not_a_design;
  VerifyMethod method = VerifyMethod::brute_force;

  /// Reports whose |residual| exceeds the tolerance, worst first.
  std::vector<MomentReport> failures(double tolerance = kDefaultTolerance) const;
};

nlohmann::json to_json(const VerificationResult& r);
std::string to_csv(const VerificationResult& r);
std::string to_text(const VerificationResult& r, double tolerance = kDefaultTolerance);

bool residual_passes(const Scalar& residual, double tolerance);

struct BruteForceOptions {
  double tolerance = kDefaultTolerance;
  /// Check only non-increasing exponent vectors (sound for S_d-orbit designs).
  bool canonical_only = false;
  std::uint64_t expansion_cap = DesignSet::kDefaultExpansionCap;
};

/// Checks every monomial x^k with 1 <= |k| <= t against the flat-simplex
/// moment.
VerificationResult verify_brute_force(const DesignSet& x, int t, const BruteForceOptions& opts = {});

/// Checks (1/(sn)) sum_{i,j} x_{ij}^k == Gamma(n)Gamma(k+1)/Gamma(n+k) for
/// k = 1..t on the base points, which decides whether their S_n-orbit is a
/// t-design. The orbit is never expanded.
VerificationResult verify_power_sum_criterion(std::span<const PointVector> base_points, int t,
                                              double tolerance = kDefaultTolerance);

/// Compares <F_G(k)>_X / |G| with the simplex moment for one representative
/// (the non-increasing one) of every G-invariant exponent vector with
/// 1 <= |k| <= t.
VerificationResult verify_G_restricted(const DesignSet& x, int t, const PermGroup& g,
                                       double tolerance = kDefaultTolerance,
                                       std::uint64_t expansion_cap = DesignSet::kDefaultExpansionCap);

struct CrossValidation {
  VerificationResult criterion;
  VerificationResult brute_force;
  bool agree() const { return criterion.is_design == brute_force.is_design; }
};

/// Runs the power-sum criterion and brute force on the expanded S_n-orbit.
/// Requires n <= 8.
CrossValidation cross_validate(std::span<const PointVector> base_points, int t,
                               double tolerance = kDefaultTolerance);

}  // namespace sdesign
