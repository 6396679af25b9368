#include "socialgrid/substrates.hpp"

#include <array>

#include "socialgrid/chemistry/chemistry.hpp"
#include "socialgrid/core/empty_room.hpp"
#include "socialgrid/ecology/allelopathic_harvest.hpp"
#include "socialgrid/ecology/clean_up.hpp"
#include "socialgrid/ecology/commons_harvest.hpp"
#include "socialgrid/matrix/matrix_substrate.hpp"
#include "socialgrid/territory/team_game.hpp"
#include "socialgrid/territory/territory.hpp"

namespace socialgrid {

namespace {

constexpr std::array<std::string_view, 9> kKinds = {
    "empty",     "matrix",           "commons_harvest",  "clean_up",  "allelopathic_harvest",
    "territory", "capture_the_flag", "king_of_the_hill", "chemistry",
};

}  // namespace

std::span<const std::string_view> substrate_kinds() { return kKinds; }

std::unique_ptr<Substrate> make_substrate(const SubstrateSpec& spec, std::uint64_t seed) {
  const auto& k = spec.kind;
  if (k == "empty") return std::make_unique<EmptyRoom>(spec, seed);
  if (k == "matrix") return std::make_unique<MatrixSubstrate>(spec, seed);
  if (k == "commons_harvest") return std::make_unique<CommonsHarvest>(spec, seed);
  if (k == "clean_up") return std::make_unique<CleanUp>(spec, seed);
  if (k == "allelopathic_harvest") return std::make_unique<AllelopathicHarvest>(spec, seed);
  if (k == "territory") return std::make_unique<Territory>(spec, seed);
  if (k == "capture_the_flag" || k == "king_of_the_hill") return std::make_unique<TeamGame>(spec, seed);
  if (k == "chemistry") return std::make_unique<Chemistry>(spec, seed);
  throw ConfigError(spec.id + ": unknown substrate kind '" + k + "'");
}

}  // namespace socialgrid
