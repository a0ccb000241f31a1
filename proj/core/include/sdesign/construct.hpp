#pragma once

#include "sdesign/design_set.hpp"
#include "sdesign/perm.hpp"
#include "sdesign/point.hpp"

#include <array>
#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sdesign {

enum class Branch { plus, minus };

/// A base point (a/(d-2), ..., a/(d-2), b, c) with c = 1 - a - b whose
/// S_d-orbit is a candidate 3-design. For d = 2 there are no leading entries
/// and a = 0.
struct FamilySolution {
  int d = 0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Branch branch = Branch::plus;
  bool satisfies_restriction = false;
  bool proper = false;
  PointVector base_point;
  /// Number of distinct points in the S_d-orbit.
  std::uint64_t orbit_size = 0;
};

nlohmann::json to_json(const FamilySolution& s);

/// The three real roots of 60x^3 - 60x^2 + 15x - 1, sorted descending, as a
/// probability vector.
PointVector sixty_cubic_roots();

/// Points (a, b, ..., b) with a + (d-1) b = 1 whose S_d-orbit is a 2-design.
/// Both roots of the quadratic are returned, larger a first.
struct UniformExcessSolution {
  int d = 0;
  double a = 0.0;
  double b = 0.0;
  bool proper = false;
  PointVector base_point;
};

std::vector<UniformExcessSolution> uniform_excess_family(int d, int t = 2);
nlohmann::json to_json(const UniformExcessSolution& s);

/// -(d/(d-2)) a^2 + 2a - (d-3)/(d+1)
double branch_discriminant(int d, double a);

/// b = ((1 - a) +/- sqrt(disc)) / 2. Throws std::domain_error when the
/// discriminant is negative (beyond a 1e-12 slack, which is clamped to 0).
double branch_b(int d, double a, Branch sign);

/// |d(a - 1) + 2| <= sqrt(2(d-1)(d-2)/(d+1)), with the same 1e-12 slack as
/// branch_b.
bool restriction_bound(int d, double a);

/// Coefficients (leading first) of the cubic in a obtained by substituting
/// the k = 2 solution for b into the k = 3 power-sum condition:
///   d(d+1)(d+2) a^3 - 3(d+1)(d-2)(d+2) a^2 + 3(d-2)^2(d+2) a - (d-2)^3.
std::array<double, 4> three_value_cubic(int d);

/// Residual of the k = 3 power-sum condition at (a, b(a)); zero on solutions.
double three_value_k3_residual(int d, double a);

/// d(d^2-1)a^3 - 3(d+2)(d^2-1)a^2 + 3(d^2-4)(d-1)a - (d-2)^2(d+1), kept for
/// comparison reports only.
std::array<double, 4> published_cubic(int d);

struct CubicRoot {
  double a;
  bool satisfies_restriction;
  double derived_residual;    // derived cubic at a (should be ~0)
  double published_residual;  // published cubic at a
};

/// Real roots of three_value_cubic(d), found by the companion matrix and
/// cross-checked against bracketing on [-1, 2] (agreement to 1e-10).
std::vector<CubicRoot> three_value_cubic_roots(int d);

/// All solutions of the k = 2, 3 power-sum conditions within the three-value
/// family, sorted by a descending, one per distinct orbit (b >= c is
/// reported, i.e. the plus branch). Roots violating the restriction have no
/// real b and are omitted. d = 2 returns the two-point solution on the
/// segment.
std::vector<FamilySolution> solve_three_value_family(int d);

DesignSet build_design(const FamilySolution& sol, const PermGroup& group);
DesignSet build_design(const FamilySolution& sol);

struct TableRow {
  std::string label;  // "4_1", "6", ...
  int d;
  double a, b, c;
  bool proper;
};

/// Proper solutions for d = 3..9.
std::vector<TableRow> proper_solutions_table();
/// Improper solutions for d in {6, 7, 8, 9, 16, 25, 100}.
std::vector<TableRow> improper_solutions_table();

}  // namespace sdesign
