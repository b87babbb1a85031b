#include "deastar/map_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "deastar/errors.hpp"

namespace deastar {

GridMap parse_map(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw ParseError(1, 1, "empty map");

  std::vector<std::uint8_t> blocked;
  std::optional<Cell> start;
  std::optional<Cell> goal;
  std::size_t width = 0;
  int y = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view row = text.substr(pos, eol - pos);
    const std::size_t line = static_cast<std::size_t>(y) + 1;

    if (y == 0) {
      width = row.size();
      if (width == 0) throw ParseError(line, 1, "empty row");
    } else if (row.size() != width) {
      throw ParseError(line, std::min(row.size(), width) + 1,
                       "ragged row: expected " + std::to_string(width) + " cells, found " + std::to_string(row.size()));
    }

    for (std::size_t x = 0; x < row.size(); ++x) {
      const Cell c{static_cast<int>(x), y};
      switch (row[x]) {
        case '#': blocked.push_back(1); break;
        case '.': blocked.push_back(0); break;
        case 'S':
          if (start) throw ParseError(line, x + 1, "duplicate start 'S'");
          start = c;
          blocked.push_back(0);
          break;
        case 'G':
          if (goal) throw ParseError(line, x + 1, "duplicate goal 'G'");
          goal = c;
          blocked.push_back(0);
          break;
        default:
          throw ParseError(line, x + 1, std::string("unknown character '") + row[x] + "'");
      }
    }
    ++y;
    pos = eol + 1;
  }

  if (!start) throw ParseError(static_cast<std::size_t>(y), 1, "missing start 'S'");
  if (!goal) throw ParseError(static_cast<std::size_t>(y), 1, "missing goal 'G'");
  return GridMap(static_cast<int>(width), y, std::move(blocked), *start, *goal);
}

std::string render_map(const GridMap& map) {
  std::string out;
  out.reserve(static_cast<std::size_t>(map.width() + 1) * static_cast<std::size_t>(map.height()));
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const Cell c{x, y};
      if (c == map.start())
        out.push_back('S');
      else if (c == map.goal())
        out.push_back('G');
      else
        out.push_back(map.blocked(c) ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

GridMap load_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open map file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

void save_map(const GridMap& map, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write map file " + path.string());
  out << render_map(map);
  if (!out) throw std::runtime_error("failed writing map file " + path.string());
}

}  // namespace deastar
