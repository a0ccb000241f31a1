#pragma once

#include "sdesign/design_set.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace sdesign {

/// Design file schema:
///   { "d": int, "mode": "explicit" | "orbit",
///     "points": [[number | "p/q", ...], ...],
///     "group": "sym" | "cyc" | {"generators": [[1-indexed image], ...]} }
/// A point whose entries are all strings is exact; any plain number makes it
/// a floating point. "group" is required for orbit mode only.
DesignSet design_from_json(const nlohmann::json& j);
nlohmann::json design_to_json(const DesignSet& design);

DesignSet read_design_file(const std::filesystem::path& path);
/// Writes via a temporary file and rename.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

nlohmann::json group_to_json(const PermGroup& g);

/// Dumps JSON with floats rendered by format_double (17 significant digits).
std::string dump_json(const nlohmann::json& j);

}  // namespace sdesign
