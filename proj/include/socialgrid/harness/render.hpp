#ifndef SOCIALGRID_HARNESS_RENDER_HPP_
#define SOCIALGRID_HARNESS_RENDER_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "socialgrid/harness/registry.hpp"

namespace socialgrid {

struct RenderOptions {
  bool player_views = false;  // also write each player's egocentric view
};

// Re-simulates the episode behind a results record and writes one full-map
// frame per step as frame_NNNNN.ppm; frame 0 is the initial state. Views go
// to p<i>_NNNNN.ppm. Throws ConfigError, before writing anything, if the
// re-simulation does not reproduce the record's digests. Returns the frame
// count.
int render_episode(const Registry& registry, const nlohmann::json& record, const std::filesystem::path& dir,
                   const RenderOptions& options = {});

}  // namespace socialgrid

#endif  // SOCIALGRID_HARNESS_RENDER_HPP_
