#ifndef SOCIALGRID_CORE_GRID_STATE_HPP_
#define SOCIALGRID_CORE_GRID_STATE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "socialgrid/core/event.hpp"
#include "socialgrid/core/inventory.hpp"
#include "socialgrid/core/rng.hpp"
#include "socialgrid/core/types.hpp"

namespace socialgrid {

enum class Terrain : std::uint8_t { kFloor = 0, kWall = 1, kRiver = 2 };

enum class ItemKind : std::uint8_t {
  kNone = 0,
  kResource = 1,      // matrix games; variant = resource index
  kApple = 2,
  kBerry = 3,         // variant = color, flags bit 0 = ripe
  kResourceWall = 4,  // territory
  kMolecule = 5,      // variant = species index
};

struct Item {
  ItemKind kind = ItemKind::kNone;
  std::uint8_t variant = 0;
  std::uint8_t flags = 0;

  bool empty() const { return kind == ItemKind::kNone; }
  bool operator==(const Item&) const = default;
};

enum class BeamKind : std::uint8_t { kZap = 0, kInteract, kClean, kClaim, kPlant, kPaint, kCount };

inline constexpr int kBeamKindCount = static_cast<int>(BeamKind::kCount);

struct Avatar {
  int id = 0;
  Position position;
  Orientation orientation = Orientation::kNorth;
  int health = 0;  // only meaningful in team substrates
  Inventory inventory;
  std::optional<int> removed_until;  // kPermanentRemoval for permanent removal
  std::optional<Team> team;
  std::uint8_t color_tag = 0;
  int frozen_until = 0;  // actions ignored while step < frozen_until
  int carried = -1;      // chemistry: held species index
  std::array<int, kBeamKindCount> beam_ready_at{};

  bool removed() const { return removed_until.has_value(); }
  bool frozen(int step) const { return step < frozen_until; }
};

struct GridState {
  int width = 0;
  int height = 0;
  std::vector<Terrain> terrain;
  std::vector<Item> items;
  std::vector<Avatar> avatars;
  std::vector<std::int16_t> occupant;  // per cell avatar id, -1 when empty
  int step = 0;
  int episode_length = 1000;
  CounterRng rng;
  std::vector<Event> event_log;

  bool in_bounds(Position p) const { return p.row >= 0 && p.col >= 0 && p.row < height && p.col < width; }
  int index(Position p) const { return p.row * width + p.col; }
  Position position_of(int idx) const { return {idx / width, idx % width}; }

  Terrain terrain_at(Position p) const { return terrain[index(p)]; }
  const Item& item_at(Position p) const { return items[index(p)]; }
  Item& item_at(Position p) { return items[index(p)]; }
  // Avatar id standing on p, or -1.
  int occupant_at(Position p) const { return occupant[index(p)]; }
  int num_players() const { return static_cast<int>(avatars.size()); }
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_GRID_STATE_HPP_
