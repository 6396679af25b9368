#ifndef SOCIALGRID_SUBSTRATES_HPP_
#define SOCIALGRID_SUBSTRATES_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

// Kinds understood by make_substrate: "empty", "matrix", "commons_harvest",
// "clean_up", "allelopathic_harvest", "territory", "capture_the_flag",
// "king_of_the_hill", "chemistry".
std::span<const std::string_view> substrate_kinds();

std::unique_ptr<Substrate> make_substrate(const SubstrateSpec& spec, std::uint64_t seed);

}  // namespace socialgrid

#endif  // SOCIALGRID_SUBSTRATES_HPP_
