#include "sdesign/design_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdesign {

namespace {

PointVector point_from_json(const nlohmann::json& row) {
  if (!row.is_array() || row.empty()) throw std::invalid_argument("point must be a non-empty array");
  bool all_strings = true;
  for (const auto& v : row) {
    if (v.is_string()) continue;
    if (!v.is_number()) throw std::invalid_argument("point entries must be numbers or \"p/q\" strings");
    all_strings = false;
  }
  if (all_strings) {
    std::vector<Rational> coords;
    for (const auto& v : row) coords.push_back(parse_rational(v.get<std::string>()));
    return PointVector::exact(std::move(coords));
  }
  std::vector<double> coords;
  for (const auto& v : row) {
    coords.push_back(v.is_string() ? to_double(parse_rational(v.get<std::string>())) : v.get<double>());
  }
  return PointVector::floating(std::move(coords));
}

nlohmann::json point_to_json(const PointVector& p) {
  auto row = nlohmann::json::array();
  if (p.is_exact()) {
    for (const auto& c : p.exact_values()) row.push_back(to_string(c));
  } else {
    for (double c : p.values()) row.push_back(c);
  }
  return row;
}

void dump_rec(const nlohmann::json& j, std::ostringstream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    case nlohmann::json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << nlohmann::json(it.key()).dump() << ": ";
        dump_rec(it.value(), os, indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      bool scalar_row = true;
      for (const auto& v : j) scalar_row = scalar_row && v.is_primitive();
      if (scalar_row) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          dump_rec(j[i], os, indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        dump_rec(j[i], os, indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

nlohmann::json group_to_json(const PermGroup& g) {
  if (g.kind() == PermGroup::Kind::symmetric) return "sym";
  if (g.kind() == PermGroup::Kind::cyclic) return "cyc";
  auto gens = nlohmann::json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_one_based());
  return {{"generators", gens}};
}

DesignSet design_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("design file must be a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer()) throw std::invalid_argument("design file needs integer \"d\"");
  if (!j.contains("points") || !j["points"].is_array()) throw std::invalid_argument("design file needs \"points\" array");
  auto d = j["d"].get<int>();
  if (d < 1) throw std::invalid_argument("\"d\" must be positive");
  std::string mode = j.value("mode", std::string("explicit"));

  std::vector<PointVector> pts;
  for (const auto& row : j["points"]) {
    pts.push_back(point_from_json(row));
    if (pts.back().dim() != static_cast<std::size_t>(d)) {
      throw std::invalid_argument("point dimension does not match \"d\"");
    }
  }
  if (mode == "explicit") return DesignSet::explicit_points(std::move(pts));
  if (mode != "orbit") throw std::invalid_argument("\"mode\" must be \"explicit\" or \"orbit\"");
  if (!j.contains("group")) throw std::invalid_argument("orbit design needs \"group\"");
  const auto& g = j["group"];
  auto spec = g.is_string() ? g.get<std::string>() : g.dump();
  return DesignSet::orbit(std::move(pts), parse_group(spec, static_cast<std::size_t>(d)));
}

nlohmann::json design_to_json(const DesignSet& design) {
  nlohmann::json j;
  j["d"] = design.dim();
  j["mode"] = design.is_orbit() ? "orbit" : "explicit";
  auto pts = nlohmann::json::array();
  for (const auto& p : design.points()) pts.push_back(point_to_json(p));
  j["points"] = pts;
  if (design.is_orbit()) j["group"] = group_to_json(*design.group());
  return j;
}

DesignSet read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open design file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed design file " + path.string() + ": " + e.what());
  }
  return design_from_json(j);
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string dump_json(const nlohmann::json& j) {
  std::ostringstream os;
  dump_rec(j, os, 0);
  os << "\n";
  return os.str();
}

}  // namespace sdesign
