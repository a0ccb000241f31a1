#include "sdesign/construct.hpp"

#include "sdesign/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace sdesign {

namespace {

constexpr double kDiscSlack = 1e-12;
constexpr double kSameValue = 1e-9;

std::string branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

// d! / prod(m_i!) over groups of (approximately) equal coordinates.
std::uint64_t distinct_orbit_size(std::span<const double> coords) {
  std::vector<double> v(coords.begin(), coords.end());
  std::sort(v.begin(), v.end());
  BigInt count = factorial(static_cast<unsigned>(v.size()));
  std::size_t run = 1;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (i < v.size() && std::fabs(v[i] - v[i - 1]) <= kSameValue * std::max(1.0, std::fabs(v[i]))) {
      ++run;
      continue;
    }
    count /= factorial(static_cast<unsigned>(run));
    run = 1;
  }
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return count.convert_to<std::uint64_t>();
}

PointVector three_value_point(int d, double a, double b) {
  std::vector<double> x(static_cast<std::size_t>(d - 2), d > 2 ? a / (d - 2) : 0.0);
  x.push_back(b);
  x.push_back(1.0 - a - b);
  // absorb rounding so the coordinates sum to 1 as closely as doubles allow
  double sum = 0.0;
  for (double v : x) sum += v;
  x.back() -= sum - 1.0;
  return PointVector::floating(std::move(x));
}

std::vector<double> sorted_coords(const PointVector& p) {
  std::vector<double> v(p.values().begin(), p.values().end());
  std::sort(v.begin(), v.end());
  return v;
}

bool same_multiset(const PointVector& p, const PointVector& q) {
  auto a = sorted_coords(p), b = sorted_coords(q);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > kSameValue * std::max(1.0, std::fabs(a[i]))) return false;
  }
  return true;
}

}  // namespace

nlohmann::json to_json(const FamilySolution& s) {
  nlohmann::json j;
  j["d"] = s.d;
  j["a"] = s.a;
  j["b"] = s.b;
  j["c"] = s.c;
  j["branch"] = branch_name(s.branch);
  j["satisfies_restriction"] = s.satisfies_restriction;
  j["proper"] = s.proper;
  j["orbit_size"] = s.orbit_size;
  j["base_point"] = std::vector<double>(s.base_point.values().begin(), s.base_point.values().end());
  return j;
}

nlohmann::json to_json(const UniformExcessSolution& s) {
  nlohmann::json j;
  j["d"] = s.d;
  j["a"] = s.a;
  j["b"] = s.b;
  j["proper"] = s.proper;
  j["base_point"] = std::vector<double>(s.base_point.values().begin(), s.base_point.values().end());
  return j;
}

PointVector sixty_cubic_roots() {
  const std::array<double, 4> cubic{60.0, -60.0, 15.0, -1.0};
  // sign changes on [0, 1] certify three real roots in (0, 1)
  if (!(evaluate_polynomial(cubic, 0.0) < 0 && evaluate_polynomial(cubic, 0.2) > 0 &&
        evaluate_polynomial(cubic, 0.5) < 0 && evaluate_polynomial(cubic, 1.0) > 0)) {
    throw std::logic_error("sign pattern of 60x^3-60x^2+15x-1 changed");
  }
  auto roots = real_roots_companion(cubic);
  auto check = real_roots_bracketed(cubic, 0.0, 1.0);
  if (roots.size() != 3 || check.size() != 3) throw std::logic_error("expected three real roots");
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::fabs(roots[i] - check[i]) > 1e-10) throw std::logic_error("root finders disagree");
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return PointVector::floating(std::move(roots));
}

std::vector<UniformExcessSolution> uniform_excess_family(int d, int t) {
  if (d < 2) throw std::invalid_argument("uniform_excess_family: d must be >= 2");
  if (t < 1 || t > 2) throw std::invalid_argument("uniform_excess_family supports t in {1, 2}");
  // d a^2 - 2a + (3-d)/(d+1) = 0
  const double root = (d - 1) / std::sqrt(static_cast<double>(d + 1));
  std::vector<UniformExcessSolution> out;
  for (double sgn : {1.0, -1.0}) {
    double a = (1.0 + sgn * root) / d;
    double b = (1.0 - a) / (d - 1);
    std::vector<double> x(static_cast<std::size_t>(d), b);
    x[0] = a;
    UniformExcessSolution s;
    s.d = d;
    s.a = a;
    s.b = b;
    s.proper = a >= 0.0 && b >= 0.0;
    s.base_point = PointVector::floating(std::move(x));
    out.push_back(std::move(s));
  }
  return out;
}

double branch_discriminant(int d, double a) {
  if (d < 3) throw std::invalid_argument("three-value family needs d >= 3");
  return -(static_cast<double>(d) / (d - 2)) * a * a + 2.0 * a -
         static_cast<double>(d - 3) / (d + 1);
}

double branch_b(int d, double a, Branch sign) {
  double disc = branch_discriminant(d, a);
  if (disc < 0.0) {
    if (disc < -kDiscSlack) {
      throw std::domain_error("no real b: discriminant " + format_double(disc) + " < 0");
    }
    disc = 0.0;
  }
  double root = std::sqrt(disc);
  return 0.5 * ((1.0 - a) + (sign == Branch::plus ? root : -root));
}

bool restriction_bound(int d, double a) {
  if (d < 3) throw std::invalid_argument("three-value family needs d >= 3");
  double lhs = d * (a - 1.0) + 2.0;
  double bound_sq = 2.0 * (d - 1) * (d - 2) / (d + 1);
  // d(d-2) * disc == bound_sq - lhs^2, so the slack matches branch_b
  return lhs * lhs <= bound_sq + kDiscSlack * d * (d - 2);
}

std::array<double, 4> three_value_cubic(int d) {
  const double dd = d;
  return {dd * (dd + 1) * (dd + 2), -3.0 * (dd + 1) * (dd - 2) * (dd + 2),
          3.0 * (dd - 2) * (dd - 2) * (dd + 2), -(dd - 2) * (dd - 2) * (dd - 2)};
}

std::array<double, 4> published_cubic(int d) {
  const double dd = d;
  return {dd * (dd * dd - 1), -3.0 * (dd + 2) * (dd * dd - 1), 3.0 * (dd * dd - 4) * (dd - 1),
          -(dd - 2) * (dd - 2) * (dd + 1)};
}

double three_value_k3_residual(int d, double a) {
  double b = branch_b(d, a, Branch::plus);
  double c = 1.0 - a - b;
  double lead = a * a * a / ((d - 2.0) * (d - 2.0));
  return lead + b * b * b + c * c * c - 6.0 / ((d + 1.0) * (d + 2.0));
}

std::vector<CubicRoot> three_value_cubic_roots(int d) {
  if (d < 3) throw std::invalid_argument("three-value family needs d >= 3");
  auto cubic = three_value_cubic(d);
  auto roots = real_roots_companion(cubic);
  auto check = real_roots_bracketed(cubic, -1.0, 2.0);
  if (roots.size() != check.size()) {
    throw std::logic_error("companion and bracketing root counts differ for d = " + std::to_string(d));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (std::fabs(roots[i] - check[i]) > 1e-10) {
      throw std::logic_error("companion and bracketing roots differ for d = " + std::to_string(d));
    }
  }
  auto published = published_cubic(d);
  std::vector<CubicRoot> out;
  for (double a : roots) {
    out.push_back({a, restriction_bound(d, a), evaluate_polynomial(cubic, a),
                   evaluate_polynomial(published, a)});
  }
  return out;
}

std::vector<FamilySolution> solve_three_value_family(int d) {
  if (d < 2) throw std::invalid_argument("solve_three_value_family: d must be >= 2");
  std::vector<FamilySolution> out;
  if (d == 2) {
    // Two-point rule on the segment: (b, 1 - b) with b = (1 + 1/sqrt 3)/2.
    FamilySolution s;
    s.d = 2;
    s.a = 0.0;
    s.b = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    s.c = 1.0 - s.b;
    s.branch = Branch::plus;
    s.satisfies_restriction = true;
    s.proper = true;
    s.base_point = PointVector::floating({s.b, s.c});
    s.orbit_size = 2;
    out.push_back(std::move(s));
    return out;
  }

  auto roots = three_value_cubic_roots(d);
  std::sort(roots.begin(), roots.end(), [](const CubicRoot& x, const CubicRoot& y) { return x.a > y.a; });
  for (const auto& r : roots) {
    if (!r.satisfies_restriction) continue;
    FamilySolution s;
    s.d = d;
    s.a = r.a;
    s.b = branch_b(d, r.a, Branch::plus);
    s.c = 1.0 - s.a - s.b;
    s.branch = Branch::plus;
    s.satisfies_restriction = true;
    s.base_point = three_value_point(d, s.a, s.b);
    s.proper = s.base_point.is_proper();
    s.orbit_size = distinct_orbit_size(s.base_point.values());
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const FamilySolution& o) {
      return same_multiset(o.base_point, s.base_point);
    });
    if (!duplicate) out.push_back(std::move(s));
  }
  if (out.empty()) throw std::logic_error("no real three-value solution for d = " + std::to_string(d));
  return out;
}

DesignSet build_design(const FamilySolution& sol, const PermGroup& group) {
  return DesignSet::orbit({sol.base_point}, group);
}

DesignSet build_design(const FamilySolution& sol) {
  return build_design(sol, PermGroup::symmetric(static_cast<std::size_t>(sol.d)));
}

namespace {

std::vector<TableRow> table_rows(std::span<const int> dims, bool want_proper) {
  std::vector<TableRow> rows;
  for (int d : dims) {
    std::vector<FamilySolution> picked;
    for (auto& s : solve_three_value_family(d)) {
      if (s.proper == want_proper) picked.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < picked.size(); ++i) {
      std::string label = std::to_string(d);
      if (picked.size() > 1) label += "_" + std::to_string(i + 1);
      rows.push_back({label, d, picked[i].a, picked[i].b, picked[i].c, picked[i].proper});
    }
  }
  return rows;
}

}  // namespace

std::vector<TableRow> proper_solutions_table() {
  static constexpr std::array<int, 7> dims{3, 4, 5, 6, 7, 8, 9};
  return table_rows(dims, true);
}

std::vector<TableRow> improper_solutions_table() {
  static constexpr std::array<int, 7> dims{6, 7, 8, 9, 16, 25, 100};
  return table_rows(dims, false);
}

}  // namespace sdesign
