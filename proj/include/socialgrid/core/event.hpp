#ifndef SOCIALGRID_CORE_EVENT_HPP_
#define SOCIALGRID_CORE_EVENT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socialgrid/core/types.hpp"

namespace socialgrid {

struct Event {
  std::string name;
  int actor = -1;   // player index, -1 for world events
  int target = -1;  // player index, -1 if none
  std::optional<Position> position;
  int timestep = 0;
  std::vector<std::pair<std::string, double>> payload;

  // Returns the payload value for key, or fallback when absent.
  double get(std::string_view key, double fallback = 0.0) const;
  bool has(std::string_view key) const;

  Event& with(std::string key, double value) {
    payload.emplace_back(std::move(key), value);
    return *this;
  }
};

// Stable event vocabulary. Puppet triggers and QC criteria may only refer to
// names listed here.
namespace events {
inline constexpr std::string_view kBump = "bump";
inline constexpr std::string_view kBeamFired = "beam_fired";
inline constexpr std::string_view kBeamBlocked = "beam_blocked";
inline constexpr std::string_view kPlayerRemoved = "player_removed";
inline constexpr std::string_view kPlayerRespawned = "player_respawned";
inline constexpr std::string_view kPlayerZapped = "player_zapped";
inline constexpr std::string_view kPlayerFrozen = "player_frozen";
// matrix games
inline constexpr std::string_view kResourceCollected = "resource_collected";
inline constexpr std::string_view kInteraction = "interaction";
inline constexpr std::string_view kInteractionOutcome = "interaction_outcome";
inline constexpr std::string_view kNoEffect = "no_effect";
// ecological
inline constexpr std::string_view kAppleEaten = "apple_eaten";
inline constexpr std::string_view kPlayerCleaned = "player_cleaned";
inline constexpr std::string_view kPollutionLevel = "pollution_level";
inline constexpr std::string_view kBerryPlanted = "berry_planted";
inline constexpr std::string_view kBerryEaten = "berry_eaten";
inline constexpr std::string_view kZapPenalty = "zap_penalty";
// territorial
inline constexpr std::string_view kResourceClaimed = "resource_claimed";
inline constexpr std::string_view kResourceActivated = "resource_activated";
inline constexpr std::string_view kResourceReward = "resource_reward";
inline constexpr std::string_view kResourceDamaged = "resource_damaged";
inline constexpr std::string_view kResourceDestroyed = "resource_destroyed";
inline constexpr std::string_view kPlayerRemovedPermanent = "player_removed_permanent";
inline constexpr std::string_view kGroundPainted = "ground_painted";
inline constexpr std::string_view kFlagPickedUp = "flag_picked_up";
inline constexpr std::string_view kFlagDropped = "flag_dropped";
inline constexpr std::string_view kFlagReturned = "flag_returned";
inline constexpr std::string_view kFlagCaptured = "flag_captured";
inline constexpr std::string_view kHillControl = "hill_control";
// chemistry
inline constexpr std::string_view kReactionFired = "reaction_fired";
inline constexpr std::string_view kMoleculePicked = "molecule_picked";
inline constexpr std::string_view kMoleculeDropped = "molecule_dropped";

std::span<const std::string_view> vocabulary();
bool is_known(std::string_view name);
}  // namespace events

// Order-sensitive 64-bit digest of an event sequence.
std::uint64_t event_digest(std::span<const Event> log);

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_EVENT_HPP_
