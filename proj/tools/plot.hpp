#pragma once

#include "sdesign/algebra.hpp"
#include "sdesign/design_set.hpp"

#include <string>
#include <vector>

namespace sdesign::cli {

/// A design point with its parity class: 0 for points produced by even
/// permutations (drawn red), 1 for odd ones (drawn green).
struct ClassedPoint {
  PointVector point;
  int parity_class = 0;
};

/// Expanded points of a d = 3 design, classed by the sign of the generating
/// permutation (explicit points are class 0). With mirror, the image of
/// every point under the transposition of the first two coordinates is added
/// with the opposite class.
std::vector<ClassedPoint> classify_points(const DesignSet& x, bool mirror);

/// Mean of f over the points of each class; classes without points are
/// omitted, so the result has one or two entries.
std::vector<double> class_values(const SymPoly& f, const std::vector<ClassedPoint>& points);

struct PlotOptions {
  int grid = 200;   // subdivisions per triangle side
  int bands = 12;   // number of filled contour bands
  int size = 640;   // SVG width in pixels
  std::string title;
};

/// SVG of the triangle x1 + x2 + x3 = 1 with filled contour bands of f and
/// the points overlaid.
std::string render_svg(const SymPoly& f, const std::vector<ClassedPoint>& points, const PlotOptions& opts);

}  // namespace sdesign::cli
