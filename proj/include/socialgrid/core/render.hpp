#ifndef SOCIALGRID_CORE_RENDER_HPP_
#define SOCIALGRID_CORE_RENDER_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "socialgrid/core/inventory.hpp"
#include "socialgrid/core/types.hpp"

namespace socialgrid {

inline constexpr int kSpritePixels = 8;

struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Color&) const = default;
};

// Row-major RGB24 image.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  void set(int x, int y, Color c) {
    auto* p = &pixels[(static_cast<std::size_t>(y) * width + x) * 3];
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }
  Color get(int x, int y) const {
    const auto* p = &pixels[(static_cast<std::size_t>(y) * width + x) * 3];
    return {p[0], p[1], p[2]};
  }
  bool operator==(const Image&) const = default;
};

// Binary PPM (P6): "P6\n<width> <height>\n255\n" followed by width*height
// RGB24 triples, rows top to bottom, pixels left to right.
void write_ppm(const Image& image, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);

// Shapes are invariant under quarter turns so that rotating the world and
// the observer together leaves item sprites unchanged.
enum class Shape : std::uint8_t { kNone, kFill, kSquare, kSmallSquare, kDiamond, kPlus, kCross, kRing };

struct CellLook {
  Color background;
  Shape shape = Shape::kNone;
  Color foreground;
  Shape overlay = Shape::kNone;  // drawn on top of the item shape
  Color overlay_color;
};

struct AvatarLook {
  Color body;
  std::optional<Color> mark;  // small badge in the center, e.g. punishment mark
};

// Draws one 8x8 sprite with its top-left corner at (x0, y0).
void draw_cell(Image& image, int x0, int y0, const CellLook& look);
// `relative` is the avatar's facing relative to the viewer (kNorth = up).
void draw_avatar(Image& image, int x0, int y0, const AvatarLook& look, Orientation relative);

namespace palette {
inline constexpr Color kOutside{0, 0, 0};
inline constexpr Color kFloor{28, 28, 28};
inline constexpr Color kWall{112, 112, 112};
inline constexpr Color kWhite{245, 245, 245};
inline constexpr Color kRed{220, 40, 40};
inline constexpr Color kGreen{40, 200, 60};
inline constexpr Color kBlue{50, 90, 230};
inline constexpr Color kPurple{150, 60, 190};
inline constexpr Color kGray{150, 150, 150};
inline constexpr Color kApple{90, 210, 70};

// Distinct avatar colors; tag i maps to player_color(i).
Color player_color(int tag);
// Color of matrix resource k.
Color resource_color(int k);
// Distinct colors for chemistry species.
Color species_color(int species);
Color lerp(Color a, Color b, double t);
}  // namespace palette

struct Observation {
  Image pixels;  // egocentric window, 8x8 pixels per cell
  double reward = 0.0;
  std::optional<Inventory> inventory;  // own inventory (matrix substrates)
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_RENDER_HPP_
