#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "deastar/grid.hpp"

namespace deastar {

// ASCII map format, one row per line, LF endings, trailing newline:
//   '#' blocked   '.' free   'S' start   'G' goal
// Exactly one S and one G. All rows have equal length.

/// Throws ParseError (1-based line/column) on ragged rows, unknown characters,
/// or missing / duplicate S or G. A missing final newline is accepted.
GridMap parse_map(std::string_view text);

/// Canonical text: every row terminated by '\n'.
std::string render_map(const GridMap& map);

/// ConfigError when the file cannot be opened, ParseError on bad contents.
GridMap load_map(const std::filesystem::path& path);
void save_map(const GridMap& map, const std::filesystem::path& path);

}  // namespace deastar
