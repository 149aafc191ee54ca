#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "atmoead/atm.hpp"
#include "atmoead/core.hpp"

namespace atmoead {

/// Shortest round-trip text for a double ("%.17g", '.' decimal point).
std::string format_number(double v);

/// One row per point, comma separated, LF line endings, optional header f1..fM.
void write_points(std::ostream& out, std::span<const ObjectiveVector> points, bool header = false);
void save_points(std::filesystem::path const& path, std::span<const ObjectiveVector> points, bool header = false);

/// Reads a numeric CSV; a non-numeric first line is taken as a header and
/// skipped. Throws ConfigError on ragged rows or unparsable cells.
std::vector<ObjectiveVector> read_points(std::istream& in);
std::vector<ObjectiveVector> load_points(std::filesystem::path const& path);

/// generation,stagnant,consistent,adapted,r,archive_size
void write_event_log(std::ostream& out, std::span<const TriggerReport> events);

} // namespace atmoead
