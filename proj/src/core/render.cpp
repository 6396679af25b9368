#include "socialgrid/core/render.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace socialgrid {

namespace {

bool in_shape(Shape shape, int x, int y) {
  switch (shape) {
    case Shape::kNone: return false;
    case Shape::kFill: return true;
    case Shape::kSquare: return x >= 1 && x <= 6 && y >= 1 && y <= 6;
    case Shape::kSmallSquare: return x >= 2 && x <= 5 && y >= 2 && y <= 5;
    case Shape::kDiamond: return std::abs(2 * x - 7) + std::abs(2 * y - 7) <= 6;
    case Shape::kPlus:
      return (x >= 3 && x <= 4 && y >= 1 && y <= 6) || (y >= 3 && y <= 4 && x >= 1 && x <= 6);
    case Shape::kCross: return x == y || x + y == 7;
    case Shape::kRing: return in_shape(Shape::kSquare, x, y) && !in_shape(Shape::kSmallSquare, x, y);
  }
  return false;
}

bool in_facing_marker(Orientation rel, int x, int y) {
  switch (rel) {
    case Orientation::kNorth: return y == 1 && (x == 3 || x == 4);
    case Orientation::kEast: return x == 6 && (y == 3 || y == 4);
    case Orientation::kSouth: return y == 6 && (x == 3 || x == 4);
    case Orientation::kWest: return x == 1 && (y == 3 || y == 4);
  }
  return false;
}

}  // namespace

void draw_cell(Image& image, int x0, int y0, const CellLook& look) {
  for (int y = 0; y < kSpritePixels; ++y) {
    for (int x = 0; x < kSpritePixels; ++x) {
      Color c = look.background;
      if (in_shape(look.shape, x, y)) c = look.foreground;
      if (in_shape(look.overlay, x, y)) c = look.overlay_color;
      image.set(x0 + x, y0 + y, c);
    }
  }
}

void draw_avatar(Image& image, int x0, int y0, const AvatarLook& look, Orientation relative) {
  constexpr Color kEye{10, 10, 10};
  for (int y = 0; y < kSpritePixels; ++y) {
    for (int x = 0; x < kSpritePixels; ++x) {
      if (!in_shape(Shape::kSquare, x, y)) continue;
      Color c = look.body;
      if (look.mark && x >= 3 && x <= 4 && y >= 3 && y <= 4) c = *look.mark;
      if (in_facing_marker(relative, x, y)) c = kEye;
      image.set(x0 + x, y0 + y, c);
    }
  }
}

void write_ppm(const Image& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

Image read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string magic;
  int w = 0;
  int h = 0;
  int maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6" || maxval != 255) throw std::runtime_error("not an 8-bit P6 file: " + path.string());
  in.get();
  Image img(w, h);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  return img;
}

namespace palette {

Color player_color(int tag) {
  static constexpr std::array<Color, 16> kColors = {{
      {230, 25, 75},   {60, 180, 75},  {255, 225, 25}, {0, 130, 200},  {245, 130, 48},  {145, 30, 180},
      {70, 240, 240},  {240, 50, 230}, {210, 245, 60}, {250, 190, 212}, {0, 128, 128},  {220, 190, 255},
      {170, 110, 40},  {255, 250, 200}, {128, 0, 0},   {170, 255, 195},
  }};
  return kColors[static_cast<std::size_t>(tag) % kColors.size()];
}

Color resource_color(int k) {
  static constexpr std::array<Color, 3> kColors = {{{200, 50, 50}, {50, 190, 70}, {60, 80, 220}}};
  return kColors[static_cast<std::size_t>(k) % kColors.size()];
}

Color species_color(int species) {
  static constexpr std::array<Color, 10> kColors = {{
      {255, 200, 0}, {0, 200, 255}, {255, 90, 160}, {120, 255, 120}, {200, 120, 255},
      {255, 140, 60}, {80, 160, 120}, {230, 230, 230}, {160, 100, 60}, {90, 90, 255},
  }};
  return kColors[static_cast<std::size_t>(species) % kColors.size()];
}

Color lerp(Color a, Color b, double t) {
  auto mix = [t](std::uint8_t x, std::uint8_t y) {
    return static_cast<std::uint8_t>(std::lround(x + (static_cast<double>(y) - x) * t));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

}  // namespace palette

}  // namespace socialgrid
