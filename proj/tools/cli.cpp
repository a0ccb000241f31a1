#include "cli.hpp"

#include "plot.hpp"

#include "sdesign/algebra.hpp"
#include "sdesign/construct.hpp"
#include "sdesign/design_io.hpp"
#include "sdesign/moments.hpp"
#include "sdesign/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace sdesign::cli {

namespace {

struct Globals {
  double tolerance = kDefaultTolerance;
  std::string format;
  std::string out_path;
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_or(const Globals& g, std::string fallback, std::initializer_list<const char*> allowed) {
  std::string f = g.format.empty() ? std::move(fallback) : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not supported by this command");
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out_path.empty()) {
    out << text;
  } else {
    write_text_file(g.out_path, text);
  }
}

MultiIndex parse_index(const std::string& text) {
  std::vector<int> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument("");
      e.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multi-index '" + text + "'");
    }
  }
  if (e.empty()) throw std::invalid_argument("empty multi-index");
  return MultiIndex(e);
}

std::vector<MultiIndex> parse_index_list(const std::string& text) {
  std::vector<MultiIndex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_index(item));
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

MultiIndex unit_power(std::size_t d, int j) {
  std::vector<int> e(d, 0);
  e[0] = j;
  return MultiIndex(e);
}

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string design;
  int t = 0;
  std::string method = "brute-force";
  std::string restricted;
  bool canonical_only = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  auto x = read_design_file(a.design);
  VerificationResult result;
  if (!a.restricted.empty()) {
    result = verify_G_restricted(x, a.t, parse_group(a.restricted, x.dim()), g.tolerance);
  } else if (a.method == "power-sum" || a.method == "cross") {
    if (!x.is_orbit() || x.group()->kind() != PermGroup::Kind::symmetric) {
      throw UsageError("method " + a.method + " needs an orbit design over the full symmetric group");
    }
    if (a.method == "power-sum") {
      result = verify_power_sum_criterion(x.points(), a.t, g.tolerance);
    } else {
      auto cv = cross_validate(x.points(), a.t, g.tolerance);
      if (!cv.agree()) throw std::logic_error("power-sum criterion and brute force disagree");
      result = cv.brute_force;
    }
  } else {
    BruteForceOptions opts;
    opts.tolerance = g.tolerance;
    opts.canonical_only = a.canonical_only;
    result = verify_brute_force(x, a.t, opts);
  }

  auto fmt = format_or(g, "json", {"json", "csv", "text"});
  if (fmt == "json") {
    emit(g, out, dump_json(to_json(result)) + "\n");
  } else if (fmt == "csv") {
    emit(g, out, to_csv(result));
  } else {
    emit(g, out, to_text(result, g.tolerance));
  }
  return result.is_design ? kPass : kFail;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
  int d = 0;
  std::string family = "three-value";
  bool include_pseudo = false;
  int t = 2;
  std::string design_dir;
};

nlohmann::json orbit_design_json(const PointVector& base) {
  auto x = DesignSet::orbit({base}, PermGroup::symmetric(base.dim()));
  return design_to_json(x);
}

int cmd_construct(const Globals& g, const ConstructArgs& a, std::ostream& out) {
  nlohmann::json report;
  report["family"] = a.family;
  report["d"] = a.d;
  std::vector<nlohmann::json> solutions;
  std::vector<PointVector> bases;
  std::size_t skipped = 0;

  if (a.family == "three-value") {
    for (const auto& s : solve_three_value_family(a.d)) {
      if (!s.proper && !a.include_pseudo) {
        ++skipped;
        continue;
      }
      solutions.push_back(to_json(s));
      bases.push_back(s.base_point);
    }
  } else {
    report["t"] = a.t;
    for (const auto& s : uniform_excess_family(a.d, a.t)) {
      if (!s.proper && !a.include_pseudo) {
        ++skipped;
        continue;
      }
      solutions.push_back(to_json(s));
      bases.push_back(s.base_point);
    }
  }
  report["solutions"] = solutions;
  report["skipped_improper"] = skipped;

  std::vector<std::string> files;
  if (!a.design_dir.empty()) {
    std::filesystem::create_directories(a.design_dir);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      auto path = std::filesystem::path(a.design_dir) /
                  (a.family + "_d" + std::to_string(a.d) + "_" + std::to_string(i + 1) + ".json");
      write_text_file(path, dump_json(orbit_design_json(bases[i])) + "\n");
      files.push_back(path.string());
    }
  }
  report["files"] = files;

  auto fmt = format_or(g, "json", {"json", "text"});
  if (fmt == "json") {
    emit(g, out, dump_json(report) + "\n");
  } else {
    std::ostringstream os;
    os << a.family << " family, d = " << a.d << ": " << solutions.size() << " solution(s)";
    if (skipped) os << ", " << skipped << " improper omitted (use --include-pseudo)";
    os << "\n";
    for (const auto& b : bases) {
      os << "  (";
      for (std::size_t i = 0; i < b.dim(); ++i) os << (i ? ", " : "") << format_double(b[i]);
      os << ")" << (b.is_proper() ? "" : "  pseudo") << "\n";
    }
    for (const auto& f : files) os << "  wrote " << f << "\n";
    emit(g, out, os.str());
  }
  return solutions.empty() ? kFail : kPass;
}

// ---------------------------------------------------------------- tables

int cmd_tables(const Globals& g, const std::string& which, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<TableRow>>> tables;
  if (which == "proper" || which == "both") tables.emplace_back("proper", proper_solutions_table());
  if (which == "improper" || which == "both") tables.emplace_back("improper", improper_solutions_table());

  auto fmt = format_or(g, "csv", {"csv", "json", "text"});
  std::ostringstream os;
  if (fmt == "csv") {
    os << "table,label,d,a,b,c,proper\n";
    for (const auto& [name, rows] : tables) {
      for (const auto& r : rows) {
        os << name << "," << r.label << "," << r.d << "," << format_double(r.a) << "," << format_double(r.b) << ","
           << format_double(r.c) << "," << (r.proper ? "true" : "false") << "\n";
      }
    }
  } else if (fmt == "json") {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, rows] : tables) {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"label", r.label}, {"d", r.d}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"proper", r.proper}});
      }
      j[name] = arr;
    }
    os << dump_json(j) << "\n";
  } else {
    for (const auto& [name, rows] : tables) {
      os << (name == "proper" ? "Proper solutions" : "Improper solutions") << "\n";
      os << "  d        a        b    1-a-b\n";
      for (const auto& r : rows) {
        os << "  " << std::left << std::setw(5) << r.label << std::right << std::setw(8) << fixed(r.a, 4)
           << std::setw(9) << fixed(r.b, 4) << std::setw(9) << fixed(r.c, 4) << "\n";
      }
    }
  }
  emit(g, out, os.str());
  return kPass;
}

// -------------------------------------------------------- counterexample

int cmd_counterexample(const Globals& g, std::ostream& out) {
  auto roots = sixty_cubic_roots();
  auto c3 = PermGroup::cyclic(3), s3 = PermGroup::symmetric(3), c4 = PermGroup::cyclic(4);
  auto cyclic = DesignSet::orbit({roots}, c3);
  auto mirror_base = PointVector::floating({roots[1], roots[0], roots[2]});
  auto mirror = DesignSet::orbit({mirror_base}, c3);
  auto full = DesignSet::orbit({roots}, s3);

  const MultiIndex k120{1, 2, 0};
  const Rational target = simplex_moment(k120);
  double observed = monomial_average(cyclic, k120).to_double();
  double mirrored = monomial_average(mirror, k120).to_double();
  double mirror_avg = 0.5 * (observed + mirrored);
  auto moments = verify_brute_force(cyclic, 3, {.tolerance = g.tolerance});

  struct SpanCase {
    std::string label;
    SymPoly candidate;
    std::vector<SymPoly> basis;
  };
  std::vector<SpanCase> spans;
  {
    std::vector<SymPoly> b3, b4, bs;
    for (int j = 1; j <= 3; ++j) b3.push_back(symmetrized_monomial(c3, unit_power(3, j)));
    for (int j = 1; j <= 2; ++j) b4.push_back(symmetrized_monomial(c4, unit_power(4, j)));
    for (int j = 1; j <= 3; ++j) bs.push_back(symmetrized_monomial(s3, unit_power(3, j)));
    spans.push_back({"F_C3(2,1,0) in span{F_C3(j,0,0) : j = 1..3}",
                     symmetrized_monomial(c3, MultiIndex{2, 1, 0}), b3});
    spans.push_back({"F_C4(1,0,1,0) in span{F_C4(1,0,0,0), F_C4(2,0,0,0)}",
                     symmetrized_monomial(c4, MultiIndex{1, 0, 1, 0}), b4});
    spans.push_back({"F_S3(2,1,0) in span{F_S3(j,0,0) : j = 1..3}",
                     symmetrized_monomial(s3, MultiIndex{2, 1, 0}), bs});
  }
  std::vector<SpanResult> span_results;
  for (const auto& s : spans) span_results.push_back(in_span(s.candidate, s.basis));

  auto repair3 = verify_brute_force(full, 3, {.tolerance = g.tolerance});
  auto repair4 = verify_brute_force(full, 4, {.tolerance = g.tolerance});

  auto fmt = format_or(g, "text", {"text", "json"});
  if (fmt == "json") {
    nlohmann::json j;
    j["roots"] = std::vector<double>(roots.values().begin(), roots.values().end());
    j["cyclic_moments"] = to_json(moments);
    j["residual_x1_x2sq"] = observed - to_double(target);
    j["mirror_average_x1_x2sq"] = mirror_avg;
    j["target_x1_x2sq"] = to_string(target);
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < spans.size(); ++i) {
      arr.push_back({{"statement", spans[i].label},
                     {"in_span", span_results[i].in_span},
                     {"coefficients", rationals_to_strings(span_results[i].coefficients)}});
    }
    j["span"] = arr;
    j["repair_t3"] = to_json(repair3);
    j["repair_t4_is_design"] = repair4.is_design;
    emit(g, out, dump_json(j) + "\n");
    return kPass;
  }

  std::ostringstream os;
  os << "Cyclic orbit X of the roots of 60x^3 - 60x^2 + 15x - 1\n";
  os << "  roots: " << format_double(roots[0]) << ", " << format_double(roots[1]) << ", "
     << format_double(roots[2]) << "\n";
  os << "  monomial averages over X (3 points), degree <= 3:\n";
  os << "    index      target     observed                 residual\n";
  for (const auto& r : moments.reports) {
    bool bad = !residual_passes(r.residual, g.tolerance);
    os << "    " << std::left << std::setw(10) << r.index.to_string() << std::setw(11) << to_string(r.target)
       << std::setw(25) << r.observed.to_string() << r.residual.to_string() << (bad ? "  FAIL" : "") << std::right
       << "\n";
  }
  os << "  |<p1 p2^2>_X - 1/30| = " << format_double(std::fabs(observed - to_double(target))) << "\n";
  os << "  mirror image X': <p1 p2^2>_X' - 1/30 = " << format_double(mirrored - to_double(target)) << "\n";
  os << "  (<p1 p2^2>_X + <p1 p2^2>_X') / 2 = " << format_double(mirror_avg) << "  (1/30 = "
     << format_double(to_double(target)) << ")\n";
  os << "  X is a 2-design: " << (verify_brute_force(cyclic, 2, {.tolerance = g.tolerance}).is_design ? "yes" : "no")
     << "; a 3-design: " << (moments.is_design ? "yes" : "no") << "\n\n";

  os << "Span membership after homogenization (exact arithmetic)\n";
  for (std::size_t i = 0; i < spans.size(); ++i) {
    os << "  " << spans[i].label << ": " << (span_results[i].in_span ? "IN SPAN" : "NOT IN SPAN");
    if (span_results[i].in_span) {
      os << "  coefficients (";
      auto c = rationals_to_strings(span_results[i].coefficients);
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << c[k];
      os << ")";
    }
    os << "\n";
  }
  os << "\nRepair with the full symmetric group\n";
  os << "  S3 orbit of the roots (" << full.size() << " points): t = 3 "
     << (repair3.is_design ? "PASS" : "FAIL") << ", max residual " << repair3.max_abs_residual.to_string()
     << "; t = 4 " << (repair4.is_design ? "PASS" : "FAIL") << ", max residual "
     << repair4.max_abs_residual.to_string() << "\n";
  emit(g, out, os.str());
  return kPass;
}

// ------------------------------------------------------------------ span

struct SpanArgs {
  int d = 0;
  std::string group = "sym";
  std::string candidate;
  std::string basis;
  bool with_constant = false;
  bool table = false;
  int t = 0;
  std::string basis_kind = "symmetrized";
  int random_checks = 20;
};

int cmd_span(const Globals& g, const SpanArgs& a, std::ostream& out) {
  auto group = parse_group(a.group, static_cast<std::size_t>(a.d));
  if (a.table) {
    if (a.t < 1) throw UsageError("--table needs --t >= 1");
    auto kind = a.basis_kind == "schur" ? DecompositionBasis::schur : DecompositionBasis::symmetrized;
    auto table = decomposition_table(static_cast<std::size_t>(a.d), a.t, group, kind);
    auto fmt = format_or(g, "text", {"text", "csv", "json"});
    if (fmt == "csv") {
      emit(g, out, table.to_csv());
    } else if (fmt == "text") {
      emit(g, out, table.to_text());
    } else {
      nlohmann::json j;
      j["d"] = table.d;
      j["t"] = table.t;
      j["group"] = table.group;
      j["basis"] = a.basis_kind;
      auto rows = nlohmann::json::array(), cols = nlohmann::json::array();
      for (const auto& r : table.rows) rows.push_back(table.label(r));
      for (const auto& c : table.columns) cols.push_back(table.label(c));
      j["rows"] = rows;
      j["columns"] = cols;
      auto coeffs = nlohmann::json::array();
      for (const auto& r : table.coefficients) coeffs.push_back(rationals_to_strings(r));
      j["coefficients"] = coeffs;
      j["rank"] = table.rank;
      emit(g, out, dump_json(j) + "\n");
    }
    return kPass;
  }

  if (a.candidate.empty()) throw UsageError("span needs --candidate or --table");
  auto cand_index = parse_index(a.candidate);
  if (cand_index.dim() != static_cast<std::size_t>(a.d)) throw UsageError("candidate dimension differs from --d");
  std::vector<MultiIndex> basis_indices;
  if (a.basis.empty()) {
    for (int j = 1; j <= cand_index.degree(); ++j) basis_indices.push_back(unit_power(cand_index.dim(), j));
  } else {
    basis_indices = parse_index_list(a.basis);
  }
  std::vector<SymPoly> basis;
  std::vector<std::string> labels;
  if (a.with_constant) {
    basis.push_back(SymPoly::constant(cand_index.dim(), Rational(1)));
    labels.push_back("1");
  }
  for (const auto& k : basis_indices) {
    if (k.dim() != cand_index.dim()) throw UsageError("basis element " + k.to_string() + " has the wrong dimension");
    basis.push_back(symmetrized_monomial(group, k));
    labels.push_back("F" + k.to_string());
  }
  auto candidate = symmetrized_monomial(group, cand_index);
  auto result = in_span(candidate, basis);

  // evaluate the identity at random simplex points as an independent check
  double max_dev = 0.0;
  if (result.in_span && a.random_checks > 0) {
    std::mt19937_64 rng(g.seed);
    std::exponential_distribution<double> e(1.0);
    for (int i = 0; i < a.random_checks; ++i) {
      std::vector<double> x(cand_index.dim());
      double s = 0;
      for (auto& v : x) s += (v = e(rng));
      for (auto& v : x) v /= s;
      double rhs = 0;
      for (std::size_t b = 0; b < basis.size(); ++b) rhs += to_double(result.coefficients[b]) * basis[b].evaluate(x);
      max_dev = std::max(max_dev, std::fabs(candidate.evaluate(x) - rhs));
    }
  }

  auto fmt = format_or(g, "text", {"text", "json"});
  if (fmt == "json") {
    nlohmann::json j;
    j["d"] = a.d;
    j["group"] = group.tag();
    j["candidate"] = "F" + cand_index.to_string();
    j["basis"] = labels;
    j["in_span"] = result.in_span;
    j["coefficients"] = rationals_to_strings(result.coefficients);
    if (result.in_span) {
      j["random_check"] = {{"points", a.random_checks}, {"seed", g.seed}, {"max_abs_deviation", max_dev}};
    }
    emit(g, out, dump_json(j) + "\n");
  } else {
    std::ostringstream os;
    os << "G = " << group.tag() << ", d = " << a.d << "\n";
    os << "F" << cand_index.to_string() << " in span{";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
    os << "}: " << (result.in_span ? "IN SPAN" : "NOT IN SPAN") << "\n";
    if (result.in_span) {
      os << "  coefficients:";
      for (std::size_t i = 0; i < labels.size(); ++i) os << " " << labels[i] << "=" << to_string(result.coefficients[i]);
      os << "\n  max deviation at " << a.random_checks << " random simplex points (seed " << g.seed
         << "): " << format_double(max_dev) << "\n";
    }
    emit(g, out, os.str());
  }
  return result.in_span ? kPass : kFail;
}

// ------------------------------------------------------------------ plot

struct PlotArgs {
  std::string monomial = "1,0,0";
  std::string group = "none";
  std::string design;
  bool mirror = false;
  int grid = 200;
  int bands = 12;
};

int cmd_plot(const Globals& g, const PlotArgs& a, std::ostream& out, std::ostream& err) {
  format_or(g, "svg", {"svg"});
  auto k = parse_index(a.monomial);
  if (k.dim() != 3) throw UsageError("plot supports d = 3 only");
  SymPoly f(3, k.degree());
  std::string title;
  if (a.group == "none") {
    f.add_term(k, 1);
    title = "M" + k.to_string();
  } else {
    auto group = parse_group(a.group, 3);
    f = symmetrized_monomial(group, k);
    title = "F_" + group.tag() + k.to_string();
  }
  std::vector<ClassedPoint> points;
  if (!a.design.empty()) {
    auto x = read_design_file(a.design);
    if (x.dim() != 3) throw UsageError("plot supports d = 3 only");
    points = classify_points(x, a.mirror);
  }
  PlotOptions opts;
  opts.grid = a.grid;
  opts.bands = a.bands;
  opts.title = title;
  emit(g, out, render_svg(f, points, opts));
  if (!points.empty()) {
    auto values = class_values(f, points);
    err << title << " class means:";
    for (double v : values) err << " " << format_double(v);
    err << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplex t-designs: verification, construction and counterexamples", "sdesign"};
  app.require_subcommand(1);
  // global flags are accepted after the subcommand name too
  app.fallthrough();

  Globals g;
  app.add_option("--tolerance", g.tolerance, "Absolute residual tolerance for floating values")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));
  app.add_option("--out", g.out_path, "Write the report to this file instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a design file against simplex moments");
  verify->add_option("--design", va.design, "Design JSON file")->required();
  verify->add_option("--t", va.t, "Strength")->required()->check(CLI::Range(1, 64));
  verify->add_option("--method", va.method, "brute-force, power-sum or cross")
      ->check(CLI::IsMember({"brute-force", "power-sum", "cross"}));
  verify->add_option("--restricted", va.restricted, "Check G-restricted design for this group (sym, cyc, [[...]])");
  verify->add_flag("--canonical-only", va.canonical_only, "Check non-increasing indices only");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Generate candidate designs");
  construct->add_option("--d", ca.d, "Dimension")->required()->check(CLI::Range(2, 100000));
  construct->add_option("--family", ca.family, "three-value or uniform-excess")
      ->check(CLI::IsMember({"three-value", "uniform-excess"}));
  construct->add_flag("--include-pseudo", ca.include_pseudo, "Also emit solutions with negative coordinates");
  construct->add_option("--t", ca.t, "Strength for uniform-excess (1 or 2)")->check(CLI::Range(1, 2));
  construct->add_option("--design-dir", ca.design_dir, "Directory for the generated design files");

  std::string which = "both";
  auto* tables = app.add_subcommand("tables", "Regenerate the proper and improper solution tables");
  tables->add_option("--which", which, "proper, improper or both")
      ->check(CLI::IsMember({"proper", "improper", "both"}));

  auto* counter = app.add_subcommand("counterexample", "Cyclic-orbit failure, span verdicts and the S3 repair");

  SpanArgs sa;
  auto* span = app.add_subcommand("span", "Span membership of symmetrized monomials");
  span->add_option("--d", sa.d, "Dimension")->required()->check(CLI::Range(1, 12));
  span->add_option("--group", sa.group, "sym, cyc or [[...]] generators");
  span->add_option("--candidate", sa.candidate, "Exponent vector, e.g. 2,1,0");
  span->add_option("--basis", sa.basis, "Semicolon-separated exponent vectors (default j,0,...,0)");
  span->add_flag("--with-constant", sa.with_constant, "Adjoin the constant polynomial to the basis");
  span->add_flag("--table", sa.table, "Print the decomposition table instead");
  span->add_option("--t", sa.t, "Degree for --table")->check(CLI::Range(1, 12));
  span->add_option("--basis-kind", sa.basis_kind, "symmetrized or schur")
      ->check(CLI::IsMember({"symmetrized", "schur"}));
  span->add_option("--random-checks", sa.random_checks, "Random simplex points for the evaluation check")
      ->check(CLI::Range(0, 1000000));

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "SVG contour plot on the 2-simplex");
  plot->add_option("--monomial", pa.monomial, "Exponent vector of length 3");
  plot->add_option("--group", pa.group, "none, sym, cyc or [[...]]");
  plot->add_option("--design", pa.design, "Design file whose points are overlaid");
  plot->add_flag("--mirror", pa.mirror, "Overlay the mirror image as the second class");
  plot->add_option("--grid", pa.grid, "Grid subdivisions per side")->check(CLI::Range(1, 2000));
  plot->add_option("--bands", pa.bands, "Number of contour bands")->check(CLI::Range(1, 256));

  std::vector<const char*> argv{"sdesign"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(g, va, out);
    if (*construct) return cmd_construct(g, ca, out);
    if (*tables) return cmd_tables(g, which, out);
    if (*counter) return cmd_counterexample(g, out);
    if (*span) return cmd_span(g, sa, out);
    if (*plot) return cmd_plot(g, pa, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sdesign::cli
