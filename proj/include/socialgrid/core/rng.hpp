#ifndef SOCIALGRID_CORE_RNG_HPP_
#define SOCIALGRID_CORE_RNG_HPP_

#include <cstdint>
#include <string_view>

namespace socialgrid {

// Mechanics that draw randomness. Each gets an independent sub-stream so that
// e.g. apple regrowth at a cell does not depend on how many players exist.
enum class Stream : std::uint64_t {
  kInitialFacing = 1,
  kSpawnShuffle = 2,
  kRespawnFacing = 3,
  kAppleRegrowth = 4,
  kOrchardSpawn = 5,
  kBerryColors = 6,
  kBerryRipen = 7,
  kBerryRecolor = 8,
  kTerritoryReward = 9,
  kHealthRecovery = 10,
  kReaction = 11,
  kRoleShuffle = 12,
  kColorShuffle = 13,
  kSeatShuffle = 100,
  kPopulationSample = 101,
  kPolicy = 102,
  kEpisodeSeed = 103,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ splitmix64(v));
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter, key). Nothing is consumed, so the order in which
// mechanics query it never changes the values they see.
class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(Stream stream, std::uint64_t counter, std::uint64_t key = 0) const {
    std::uint64_t h = splitmix64(seed_ ^ 0xD1B54A32D192ED03ULL);
    h = hash_combine(h, static_cast<std::uint64_t>(stream));
    h = hash_combine(h, counter);
    return hash_combine(h, key);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform(Stream stream, std::uint64_t counter, std::uint64_t key = 0) const {
    return static_cast<double>(bits(stream, counter, key) >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p, Stream stream, std::uint64_t counter, std::uint64_t key = 0) const {
    return uniform(stream, counter, key) < p;
  }

  // Uniform integer in [0, n). Rejection-free multiply-shift; bias < 2^-32 for n < 2^32.
  std::uint64_t below(std::uint64_t n, Stream stream, std::uint64_t counter, std::uint64_t key = 0) const {
    const auto x = static_cast<unsigned __int128>(bits(stream, counter, key));
    return static_cast<std::uint64_t>((x * n) >> 64);
  }

 private:
  std::uint64_t seed_ = 0;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_RNG_HPP_
