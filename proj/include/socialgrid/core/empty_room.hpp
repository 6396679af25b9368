#ifndef SOCIALGRID_CORE_EMPTY_ROOM_HPP_
#define SOCIALGRID_CORE_EMPTY_ROOM_HPP_

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

// Movement only; no items and no rewards.
class EmptyRoom final : public Substrate {
 public:
  EmptyRoom(SubstrateSpec spec, std::uint64_t seed) : Substrate(std::move(spec), seed) { initialize(); }
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_EMPTY_ROOM_HPP_
