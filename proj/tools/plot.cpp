#include "plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sdesign::cli {

namespace {

struct Xy {
  double x, y;
};

class Frame {
 public:
  explicit Frame(int size) {
    double margin = 0.06 * size;
    double side = size - 2 * margin;
    double h = side * std::sqrt(3.0) / 2;
    top_ = {size / 2.0, margin};
    left_ = {margin, margin + h};
    right_ = {size - margin, margin + h};
    height_ = static_cast<int>(std::ceil(2 * margin + h)) + 24;
  }

  // x1 at the top vertex, x2 bottom left, x3 bottom right
  Xy map(double x1, double x2, double x3) const {
    return {x1 * top_.x + x2 * left_.x + x3 * right_.x, x1 * top_.y + x2 * left_.y + x3 * right_.y};
  }

  int height() const { return height_; }
  Xy top() const { return top_; }
  Xy left() const { return left_; }
  Xy right() const { return right_; }

 private:
  Xy top_, left_, right_;
  int height_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Piecewise-linear ramp through a few viridis samples.
std::string band_color(int band, int bands) {
  static constexpr std::array<std::array<int, 3>, 5> ramp{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140},
                                                          {94, 201, 98}, {253, 231, 37}}};
  double t = bands > 1 ? static_cast<double>(band) / (bands - 1) : 0.0;
  double pos = t * (ramp.size() - 1);
  auto i = std::min(static_cast<std::size_t>(pos), ramp.size() - 2);
  double f = pos - static_cast<double>(i);
  char buf[8];
  int c[3];
  for (int k = 0; k < 3; ++k) c[k] = static_cast<int>(std::lround(ramp[i][k] * (1 - f) + ramp[i + 1][k] * f));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

}  // namespace

std::vector<ClassedPoint> classify_points(const DesignSet& x, bool mirror) {
  if (x.dim() != 3) throw std::invalid_argument("plot supports d = 3 only");
  std::vector<ClassedPoint> out;
  if (x.is_orbit()) {
    for (auto& lp : x.expand_labeled()) out.push_back({lp.point, lp.perm.sign() > 0 ? 0 : 1});
  } else {
    for (const auto& p : x.points()) out.push_back({p, 0});
  }
  if (mirror) {
    auto swap = Permutation(std::vector<int>{1, 0, 2});
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back({apply(swap, out[i].point), 1 - out[i].parity_class});
  }
  return out;
}

std::vector<double> class_values(const SymPoly& f, const std::vector<ClassedPoint>& points) {
  std::array<double, 2> sum{0, 0};
  std::array<int, 2> count{0, 0};
  for (const auto& p : points) {
    sum[p.parity_class] += f.evaluate(p.point.values());
    ++count[p.parity_class];
  }
  std::vector<double> out;
  for (int c = 0; c < 2; ++c) {
    if (count[c]) out.push_back(sum[c] / count[c]);
  }
  return out;
}

std::string render_svg(const SymPoly& f, const std::vector<ClassedPoint>& points, const PlotOptions& opts) {
  if (f.dim() != 3) throw std::invalid_argument("plot supports d = 3 only");
  if (opts.grid < 1 || opts.bands < 1) throw std::invalid_argument("grid and bands must be positive");
  const int n = opts.grid;
  Frame frame(opts.size);

  // Triangle s of row r (0 at the bottom edge) alternates up/down; its value
  // is f at the centroid.
  auto lattice = [&](int level, int q) {
    double x1 = static_cast<double>(level) / n, x3 = static_cast<double>(q) / n;
    return std::array<double, 3>{x1, 1.0 - x1 - x3, x3};
  };
  auto centroid_value = [&](int r, int s) {
    int j = s / 2;
    std::array<std::array<double, 3>, 3> v;
    if (s % 2 == 0) {
      v = {lattice(r, j), lattice(r, j + 1), lattice(r + 1, j)};
    } else {
      v = {lattice(r + 1, j), lattice(r, j + 1), lattice(r + 1, j + 1)};
    }
    std::array<double, 3> c{};
    for (const auto& p : v)
      for (int k = 0; k < 3; ++k) c[k] += p[k] / 3;
    return f.evaluate(c);
  };

  std::vector<std::vector<double>> values(static_cast<std::size_t>(n));
  double lo = INFINITY, hi = -INFINITY;
  for (int r = 0; r < n; ++r) {
    int count = 2 * (n - r) - 1;
    auto& row = values[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
      double v = centroid_value(r, s);
      row.push_back(v);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  auto band_of = [&](double v) {
    if (hi <= lo) return 0;
    int b = static_cast<int>((v - lo) / (hi - lo) * opts.bands);
    return std::clamp(b, 0, opts.bands - 1);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << frame.height()
      << "\" viewBox=\"0 0 " << opts.size << " " << frame.height() << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g id=\"bands\" stroke=\"none\">\n";
  for (int r = 0; r < n; ++r) {
    const auto& row = values[static_cast<std::size_t>(r)];
    int count = static_cast<int>(row.size());
    int a = 0;
    while (a < count) {
      int band = band_of(row[static_cast<std::size_t>(a)]);
      int b = a;
      while (b + 1 < count && band_of(row[static_cast<std::size_t>(b + 1)]) == band) ++b;
      // a run of triangles a..b is bounded by bottom lattice points
      // blo..bhi and top lattice points tlo..thi
      int blo = (a + 1) / 2, bhi = b / 2 + 1, tlo = a / 2, thi = (b + 1) / 2;
      svg << "<polygon fill=\"" << band_color(band, opts.bands) << "\" points=\"";
      auto put = [&](int level, int q) {
        auto p = lattice(level, q);
        auto xy = frame.map(p[0], p[1], p[2]);
        svg << fmt(xy.x) << "," << fmt(xy.y) << " ";
      };
      for (int q = blo; q <= bhi; ++q) put(r, q);
      for (int q = thi; q >= tlo; --q) put(r + 1, q);
      svg << "\"/>\n";
      a = b + 1;
    }
  }
  svg << "</g>\n";

  auto t = frame.top(), l = frame.left(), rt = frame.right();
  svg << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"" << fmt(t.x) << "," << fmt(t.y)
      << " " << fmt(l.x) << "," << fmt(l.y) << " " << fmt(rt.x) << "," << fmt(rt.y) << "\"/>\n";
  svg << "<text x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y - 6) << "\" text-anchor=\"middle\" font-size=\"14\">x1</text>\n";
  svg << "<text x=\"" << fmt(l.x - 4) << "\" y=\"" << fmt(l.y + 16) << "\" text-anchor=\"end\" font-size=\"14\">x2</text>\n";
  svg << "<text x=\"" << fmt(rt.x + 4) << "\" y=\"" << fmt(rt.y + 16) << "\" font-size=\"14\">x3</text>\n";

  svg << "<g id=\"points\" stroke=\"black\" stroke-width=\"0.8\">\n";
  for (const auto& p : points) {
    auto xy = frame.map(p.point[0], p.point[1], p.point[2]);
    char value[32];
    std::snprintf(value, sizeof value, "%.17g", f.evaluate(p.point.values()));
    svg << "<circle cx=\"" << fmt(xy.x) << "\" cy=\"" << fmt(xy.y) << "\" r=\"5\" fill=\""
        << (p.parity_class == 0 ? "#d62728" : "#2ca02c") << "\" data-class=\"" << p.parity_class
        << "\"><title>" << value << "</title></circle>\n";
  }
  svg << "</g>\n";
  if (!opts.title.empty()) {
    svg << "<text x=\"" << opts.size / 2 << "\" y=\"" << frame.height() - 8
        << "\" text-anchor=\"middle\" font-size=\"14\">" << opts.title << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sdesign::cli
