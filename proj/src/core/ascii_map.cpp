#include "socialgrid/core/ascii_map.hpp"

#include <fstream>
#include <sstream>

namespace socialgrid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

AsciiMap AsciiMap::parse(std::string_view text) {
  AsciiMap m;
  enum class Section { kHeader, kLegend, kMap } section = Section::kHeader;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (section == Section::kMap) {
      if (raw.empty()) continue;
      m.rows_.push_back(raw);
      continue;
    }
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("name:")) {
      m.name_ = std::string(trim(line.substr(5)));
    } else if (line == "legend:") {
      section = Section::kLegend;
    } else if (line == "map:") {
      section = Section::kMap;
    } else if (section == Section::kLegend) {
      if (line.size() < 3 || line[1] != ' ') {
        throw ConfigError("map line " + std::to_string(line_no) + ": legend entries are '<char> <tag>'");
      }
      m.legend_[line[0]] = std::string(trim(line.substr(2)));
    } else {
      throw ConfigError("map line " + std::to_string(line_no) + ": unexpected header line");
    }
  }
  if (m.rows_.empty()) throw ConfigError("map has no rows");
  m.height_ = static_cast<int>(m.rows_.size());
  m.width_ = static_cast<int>(m.rows_.front().size());
  for (std::size_t r = 0; r < m.rows_.size(); ++r) {
    if (static_cast<int>(m.rows_[r].size()) != m.width_) {
      throw ConfigError("map row " + std::to_string(r) + " has width " + std::to_string(m.rows_[r].size()) +
                        ", expected " + std::to_string(m.width_));
    }
    for (char c : m.rows_[r]) {
      if (!m.legend_.contains(c)) throw ConfigError(std::string("map character '") + c + "' missing from legend");
    }
  }
  return m;
}

AsciiMap AsciiMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open map file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto m = parse(buf.str());
  if (m.name_.empty()) m.name_ = path.stem().string();
  return m;
}

const std::string& AsciiMap::tag_at(Position p) const { return legend_.at(rows_[p.row][p.col]); }

std::vector<Position> AsciiMap::cells_with(std::string_view tag) const {
  std::vector<Position> out;
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      if (tag_at({r, c}) == tag) out.push_back({r, c});
  return out;
}

std::vector<Position> AsciiMap::cells_with_prefix(std::string_view prefix) const {
  std::vector<Position> out;
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      if (tag_at({r, c}).starts_with(prefix)) out.push_back({r, c});
  return out;
}

}  // namespace socialgrid
