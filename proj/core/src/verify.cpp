#include "sdesign/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sdesign {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::proper_design: return "proper-design";
    case Classification::pseudodesign: return "pseudodesign";
    case Classification::not_a_design: return "not-a-design";
  }
  return "?";
}

std::string to_string(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::brute_force: return "brute-force";
    case VerifyMethod::power_sum_criterion: return "power-sum-criterion";
    case VerifyMethod::g_restricted: return "G-restricted";
  }
  return "?";
}

bool residual_passes(const Scalar& residual, double tolerance) {
  if (residual.is_exact()) return residual.is_zero();
  return std::fabs(residual.to_double()) <= tolerance;
}

namespace {

bool abs_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return abs(a.exact()) < abs(b.exact());
  return std::fabs(a.to_double()) < std::fabs(b.to_double());
}

MomentReport make_report(MultiIndex k, Rational target, Scalar observed, std::string tag) {
  Scalar residual = observed - Scalar(target);
  return {std::move(k), std::move(target), std::move(observed), std::move(residual), std::move(tag)};
}

void finish(VerificationResult& r, double tolerance, bool proper) {
  r.max_abs_residual = Scalar(Rational(0));
  bool all_exact = true;
  bool pass = true;
  for (const auto& rep : r.reports) {
    all_exact = all_exact && rep.residual.is_exact();
    if (abs_less(r.max_abs_residual, rep.residual)) r.max_abs_residual = rep.residual.abs();
    pass = pass && residual_passes(rep.residual, tolerance);
  }
  if (!all_exact) r.max_abs_residual = Scalar(r.max_abs_residual.to_double());
  r.is_design = pass;
  if (!pass) {
    r.classification = Classification::not_a_design;
  } else {
    r.classification = proper ? Classification::proper_design : Classification::pseudodesign;
  }
}

}  // namespace

std::vector<MomentReport> VerificationResult::failures(double tolerance) const {
  std::vector<MomentReport> out;
  for (const auto& rep : reports) {
    if (!residual_passes(rep.residual, tolerance)) out.push_back(rep);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MomentReport& a, const MomentReport& b) { return abs_less(b.residual, a.residual); });
  return out;
}

VerificationResult verify_brute_force(const DesignSet& x, int t, const BruteForceOptions& opts) {
  if (t < 1) throw std::invalid_argument("verify_brute_force: t must be >= 1");
  auto pts = x.expand(opts.expansion_cap);
  if (pts.empty()) throw std::invalid_argument("verify_brute_force: empty design");
  VerificationResult r;
  r.t = t;
  r.method = VerifyMethod::brute_force;
  for (auto& k : enumerate_multi_indices(static_cast<int>(x.dim()), t, false)) {
    if (k.degree() == 0) continue;
    if (opts.canonical_only && !k.is_canonical()) continue;
    auto observed = monomial_average(pts, k);
    auto target = simplex_moment(k);
    r.reports.push_back(make_report(std::move(k), std::move(target), std::move(observed), "none"));
  }
  finish(r, opts.tolerance, x.is_proper());
  return r;
}

VerificationResult verify_power_sum_criterion(std::span<const PointVector> base_points, int t,
                                              double tolerance) {
  if (base_points.empty()) throw std::invalid_argument("verify_power_sum_criterion: empty input");
  if (t < 1) throw std::invalid_argument("verify_power_sum_criterion: t must be >= 1");
  const std::size_t n = base_points.front().dim();
  bool exact = true;
  bool proper = true;
  for (const auto& p : base_points) {
    if (p.dim() != n) throw std::invalid_argument("base points have mixed dimensions");
    exact = exact && p.is_exact();
    proper = proper && p.is_proper();
  }
  const auto count = base_points.size() * n;

  VerificationResult r;
  r.t = t;
  r.method = VerifyMethod::power_sum_criterion;
  for (int k = 1; k <= t; ++k) {
    Scalar observed;
    if (exact) {
      Rational sum = 0;
      for (const auto& p : base_points) {
        for (const auto& c : p.exact_values()) {
          Rational pw = 1;
          for (int e = 0; e < k; ++e) pw *= c;
          sum += pw;
        }
      }
      observed = Scalar(Rational(sum / count));
    } else {
      double sum = 0.0;
      for (const auto& p : base_points) {
        for (double c : p.values()) sum += std::pow(c, k);
      }
      observed = Scalar(sum / static_cast<double>(count));
    }
    std::vector<int> e(n, 0);
    e[0] = k;
    r.reports.push_back(make_report(MultiIndex(std::move(e)), power_sum_target(static_cast<int>(n), k),
                                    std::move(observed), "power-sum"));
  }
  finish(r, tolerance, proper);
  return r;
}

VerificationResult verify_G_restricted(const DesignSet& x, int t, const PermGroup& g, double tolerance,
                                       std::uint64_t expansion_cap) {
  if (t < 1) throw std::invalid_argument("verify_G_restricted: t must be >= 1");
  if (g.dim() != x.dim()) throw std::invalid_argument("verify_G_restricted: group degree mismatch");
  auto pts = x.expand(expansion_cap);
  if (pts.empty()) throw std::invalid_argument("verify_G_restricted: empty design");
  const Scalar order(Rational(static_cast<long long>(g.order())));

  VerificationResult r;
  r.t = t;
  r.method = VerifyMethod::g_restricted;
  for (int deg = 1; deg <= t; ++deg) {
    auto parts = partitions(deg, static_cast<int>(x.dim()));
    // report in descending order, matching enumerate_multi_indices
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!is_G_invariant(g, *it)) continue;
      auto observed = symmetrized_average(pts, *it, g) / order;
      r.reports.push_back(make_report(*it, simplex_moment(*it), std::move(observed), g.tag()));
    }
  }
  finish(r, tolerance, x.is_proper());
  return r;
}

CrossValidation cross_validate(std::span<const PointVector> base_points, int t, double tolerance) {
  if (base_points.empty()) throw std::invalid_argument("cross_validate: empty input");
  auto n = base_points.front().dim();
  if (n > 8) throw std::length_error("cross_validate expands S_n orbits only for n <= 8");
  CrossValidation cv{verify_power_sum_criterion(base_points, t, tolerance), {}};
  auto design = DesignSet::orbit(std::vector<PointVector>(base_points.begin(), base_points.end()),
                                 PermGroup::symmetric(n));
  BruteForceOptions opts;
  opts.tolerance = tolerance;
  cv.brute_force = verify_brute_force(design, t, opts);
  return cv;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const VerificationResult& r) {
  nlohmann::json j;
  j["method"] = to_string(r.method);
  j["t"] = r.t;
  j["is_design"] = r.is_design;
  j["classification"] = to_string(r.classification);
  if (r.max_abs_residual.is_exact()) {
    j["max_abs_residual"] = r.max_abs_residual.to_string();
  } else {
    j["max_abs_residual"] = r.max_abs_residual.to_double();
  }
  auto reps = nlohmann::json::array();
  for (const auto& rep : r.reports) reps.push_back(to_json(rep));
  j["reports"] = reps;
  return j;
}

std::string to_csv(const VerificationResult& r) {
  std::string s = csv_header_moment_report() + "\n";
  for (const auto& rep : r.reports) s += to_csv_row(rep) + "\n";
  return s;
}

std::string to_text(const VerificationResult& r, double tolerance) {
  std::ostringstream os;
  os << "method: " << to_string(r.method) << "\n"
     << "t: " << r.t << "\n"
     << "is_design: " << (r.is_design ? "true" : "false") << "\n"
     << "classification: " << to_string(r.classification) << "\n"
     << "max_abs_residual: " << r.max_abs_residual.to_string() << "\n";
  auto bad = r.failures(tolerance);
  os << "checked " << r.reports.size() << " moments, " << bad.size() << " failing\n";
  for (const auto& rep : bad) {
    os << "  FAIL " << rep.index.to_string() << " target=" << to_string(rep.target)
       << " observed=" << rep.observed.to_string() << " residual=" << rep.residual.to_string() << "\n";
  }
  return os.str();
}

}  // namespace sdesign
