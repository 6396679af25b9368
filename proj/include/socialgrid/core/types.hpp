#ifndef SOCIALGRID_CORE_TYPES_HPP_
#define SOCIALGRID_CORE_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace socialgrid {

struct Position {
  int row = 0;
  int col = 0;

  auto operator<=>(const Position&) const = default;

  Position operator+(const Position& o) const { return {row + o.row, col + o.col}; }
  Position operator-(const Position& o) const { return {row - o.row, col - o.col}; }
  Position operator*(int k) const { return {row * k, col * k}; }
};

enum class Orientation : std::uint8_t { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

inline Orientation rotate_left(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 3) % 4);
}
inline Orientation rotate_right(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 1) % 4);
}
inline Orientation opposite(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 2) % 4);
}

// Unit displacement of one cell in direction o (rows grow southward).
inline Position unit_vector(Orientation o) {
  switch (o) {
    case Orientation::kNorth: return {-1, 0};
    case Orientation::kEast: return {0, 1};
    case Orientation::kSouth: return {1, 0};
    case Orientation::kWest: return {0, -1};
  }
  return {0, 0};
}

const char* orientation_name(Orientation o);

enum class Team : std::uint8_t { kRed = 0, kBlue = 1 };

inline Team other_team(Team t) { return t == Team::kRed ? Team::kBlue : Team::kRed; }

// Action ids shared by every substrate. Substrate-specific actions
// (beams, grab, plant) are numbered from kFirstSubstrateAction.
namespace action {
inline constexpr int kNoop = 0;
inline constexpr int kForward = 1;
inline constexpr int kBackward = 2;
inline constexpr int kStrafeLeft = 3;
inline constexpr int kStrafeRight = 4;
inline constexpr int kTurnLeft = 5;
inline constexpr int kTurnRight = 6;
inline constexpr int kFirstSubstrateAction = 7;
}  // namespace action

// removed_until value for avatars that never come back.
inline constexpr int kPermanentRemoval = std::numeric_limits<int>::max();

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_TYPES_HPP_
