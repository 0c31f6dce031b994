#pragma once

#include <iosfwd>
#include <string>

#include "labyrinth/celestial.hpp"

namespace labyrinth::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3 };

/// Entry point of the `labyrinth` tool. Writes the report to out and
/// diagnostics to err; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Strict orbit CSV: header `name,semimajor_axis_m`, then `name,value` rows.
/// Throws ParseError (with line number) or ValidationError.
celestial::OrbitTable ingest_orbit_csv(const std::string& path);
celestial::OrbitTable parse_orbit_csv(std::istream& in);

}  // namespace labyrinth::cli
