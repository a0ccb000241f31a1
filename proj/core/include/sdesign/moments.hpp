#pragma once

#include "sdesign/design_set.hpp"
#include "sdesign/multi_index.hpp"
#include "sdesign/perm.hpp"
#include "sdesign/scalar.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace sdesign {

/// Comparison of a design average against the flat-simplex value for one
/// exponent vector.
struct MomentReport {
  MultiIndex index;
  Rational target;
  Scalar observed;
  Scalar residual;              // observed - target
  std::string symmetrization;   // "none", "sym", "cyc", "gen", "power-sum"
};

nlohmann::json to_json(const MomentReport& r);
/// "index,target,observed,residual,symmetrization"
std::string csv_header_moment_report();
std::string to_csv_row(const MomentReport& r);

/// prod Gamma(alpha_i) / Gamma(sum alpha_i) for positive integer arguments.
Rational generalized_beta(std::span<const int> alphas);

/// Flat-measure average of x^k over the simplex of dimension d = k.dim():
/// (d-1)! prod k_i! / (d-1+|k|)!.
Rational simplex_moment(const MultiIndex& k);

/// Gamma(n) Gamma(k+1) / Gamma(n+k): the per-coordinate average of x_j^k.
Rational power_sum_target(int n, int k);

/// x^k evaluated at a point; exact for exact points.
Scalar monomial_value(const PointVector& p, const MultiIndex& k);

/// (1/|X|) sum_{p in X} x^k over the expanded multiset.
Scalar monomial_average(const DesignSet& x, const MultiIndex& k,
                        std::uint64_t cap = DesignSet::kDefaultExpansionCap);
Scalar monomial_average(std::span<const PointVector> points, const MultiIndex& k);

/// <F_G(k)>_X = sum_{g in G} monomial_average(X, g(k)).
Scalar symmetrized_average(const DesignSet& x, const MultiIndex& k, const PermGroup& g,
                           std::uint64_t cap = DesignSet::kDefaultExpansionCap);
Scalar symmetrized_average(std::span<const PointVector> points, const MultiIndex& k,
                           const PermGroup& g);

}  // namespace sdesign
