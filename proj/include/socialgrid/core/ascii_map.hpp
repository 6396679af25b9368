#ifndef SOCIALGRID_CORE_ASCII_MAP_HPP_
#define SOCIALGRID_CORE_ASCII_MAP_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "socialgrid/core/types.hpp"

namespace socialgrid {

// Text map: a header with a legend table, then one character per cell.
//
//   # comments start with '#'
//   name: commons_open
//   legend:
//     W wall
//     . floor
//     A apple
//     P spawn
//   map:
//   WWWWW
//   WPA.W
//   WWWWW
//
// Tags are free-form strings interpreted by the substrate ("resource:0",
// "spawn:red", "molecule:energy", ...). Every map row must have equal width
// and every character must appear in the legend.
class AsciiMap {
 public:
  static AsciiMap parse(std::string_view text);
  static AsciiMap load(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  int width() const { return width_; }
  int height() const { return height_; }

  const std::string& tag_at(Position p) const;
  char char_at(Position p) const { return rows_[p.row][p.col]; }

  // Cells whose tag equals `tag`, in row-major order.
  std::vector<Position> cells_with(std::string_view tag) const;
  // Cells whose tag starts with `prefix`, in row-major order.
  std::vector<Position> cells_with_prefix(std::string_view prefix) const;

  const std::map<char, std::string>& legend() const { return legend_; }
  const std::vector<std::string>& rows() const { return rows_; }

 private:
  std::string name_;
  int width_ = 0;
  int height_ = 0;
  std::map<char, std::string> legend_;
  std::vector<std::string> rows_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_ASCII_MAP_HPP_
