#include "socialgrid/core/event.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "socialgrid/core/rng.hpp"

namespace socialgrid {

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::kNorth: return "N";
    case Orientation::kEast: return "E";
    case Orientation::kSouth: return "S";
    case Orientation::kWest: return "W";
  }
  return "?";
}

double Event::get(std::string_view key, double fallback) const {
  for (const auto& [k, v] : payload) {
    if (k == key) return v;
  }
  return fallback;
}

bool Event::has(std::string_view key) const {
  return std::any_of(payload.begin(), payload.end(), [&](const auto& kv) { return kv.first == key; });
}

namespace events {

namespace {
constexpr std::array kVocabulary = {
    kBump,           kBeamFired,        kBeamBlocked,          kPlayerRemoved,     kPlayerRespawned,
    kPlayerZapped,   kPlayerFrozen,     kResourceCollected,    kInteraction,       kInteractionOutcome,
    kNoEffect,       kAppleEaten,       kPlayerCleaned,        kPollutionLevel,    kBerryPlanted,
    kBerryEaten,     kZapPenalty,       kResourceClaimed,      kResourceActivated, kResourceReward,
    kResourceDamaged, kResourceDestroyed, kPlayerRemovedPermanent, kGroundPainted, kFlagPickedUp,
    kFlagDropped,    kFlagReturned,     kFlagCaptured,         kHillControl,       kReactionFired,
    kMoleculePicked, kMoleculeDropped,
};
}  // namespace

std::span<const std::string_view> vocabulary() { return kVocabulary; }

bool is_known(std::string_view name) {
  return std::find(kVocabulary.begin(), kVocabulary.end(), name) != kVocabulary.end();
}

}  // namespace events

std::uint64_t event_digest(std::span<const Event> log) {
  std::uint64_t h = 0x6A09E667F3BCC909ULL;
  for (const auto& e : log) {
    h = hash_combine(h, fnv1a64(e.name));
    h = hash_combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(e.actor)));
    h = hash_combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(e.target)));
    h = hash_combine(h, e.position ? (static_cast<std::uint64_t>(e.position->row) << 32) ^
                                         static_cast<std::uint32_t>(e.position->col)
                                   : ~0ULL);
    h = hash_combine(h, static_cast<std::uint64_t>(e.timestep));
    for (const auto& [k, v] : e.payload) {
      h = hash_combine(h, fnv1a64(k));
      h = hash_combine(h, std::bit_cast<std::uint64_t>(v));
    }
  }
  return h;
}

}  // namespace socialgrid
