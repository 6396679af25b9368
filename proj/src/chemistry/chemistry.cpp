#include "socialgrid/chemistry/chemistry.hpp"

#include <algorithm>
#include <cstdlib>

namespace socialgrid {

namespace {

struct Token {
  int species;
  Position pos;
  int holder;  // -1 for a molecule lying on the ground
};

}  // namespace

Chemistry::Chemistry(SubstrateSpec spec, std::uint64_t seed) : Substrate(std::move(spec), seed) {
  if (!spec_.params.contains("graph") || !spec_.params.at("graph").is_object()) {
    throw ConfigError(spec_.id + ": chemistry needs an inline reaction graph");
  }
  graph_ = ReactionGraph::from_json(spec_.params.at("graph"));
  radius_ = spec_.params.value("neighborhood_radius", 1);
  if (radius_ < 1) throw ConfigError(spec_.id + ": neighborhood_radius must be >= 1");
  initialize();
}

std::string Chemistry::action_name(int a) const { return a == kGrabDrop ? "grab_drop" : Substrate::action_name(a); }

bool Chemistry::init_cell(Position p, std::string_view tag) {
  if (!tag.starts_with("molecule:")) return false;
  const int s = graph_.species_index(std::string(tag.substr(9)));
  state_.item_at(p) = Item{ItemKind::kMolecule, static_cast<std::uint8_t>(s), 0};
  return true;
}

std::vector<int> Chemistry::species_counts() const {
  std::vector<int> counts(graph_.species.size(), 0);
  for (const auto& it : state_.items) {
    if (it.kind == ItemKind::kMolecule) ++counts[it.variant];
  }
  for (const auto& a : state_.avatars) {
    if (!a.removed() && a.carried >= 0) ++counts[a.carried];
  }
  return counts;
}

void Chemistry::on_action(int player, int a) {
  if (a != kGrabDrop) return;
  auto& me = avatar(player);
  const Position front = me.position + unit_vector(me.orientation);
  if (!state_.in_bounds(front) || state_.terrain_at(front) != Terrain::kFloor) return;
  auto& item = state_.item_at(front);
  if (me.carried < 0) {
    if (item.kind != ItemKind::kMolecule) return;
    me.carried = item.variant;
    item = Item{};
    emit(events::kMoleculePicked, player, -1, front).with("species", me.carried);
  } else if (item.empty() && state_.occupant_at(front) == -1) {
    item = Item{ItemKind::kMolecule, static_cast<std::uint8_t>(me.carried), 0};
    emit(events::kMoleculeDropped, player, -1, front).with("species", me.carried);
    me.carried = -1;
  }
}

void Chemistry::world_update() { react_step(); }

void Chemistry::react_step() {
  const int cells = static_cast<int>(state_.items.size());
  const int n = num_players();
  // Molecules consumed or produced this step take no further part in it.
  std::vector<std::uint8_t> cell_busy(cells, 0);
  std::vector<std::uint8_t> holder_busy(n, 0);
  const int nr = static_cast<int>(graph_.reactions.size());

  auto in_reach = [&](Position p) { return state_.in_bounds(p) && state_.terrain_at(p) == Terrain::kFloor; };

  for (int anchor = 0; anchor < cells; ++anchor) {
    const Position a = state_.position_of(anchor);
    if (!in_reach(a)) continue;
    for (int r = 0; r < nr; ++r) {
      const Reaction& rx = graph_.reactions[r];
      // Candidate molecules: the anchor cell first, then the rest of the
      // neighborhood in row-major order; ground before carried.
      std::vector<Token> candidates;
      auto collect = [&](Position p) {
        const int idx = state_.index(p);
        if (!cell_busy[idx] && state_.items[idx].kind == ItemKind::kMolecule) {
          candidates.push_back({state_.items[idx].variant, p, -1});
        }
        const int occ = state_.occupant[idx];
        if (occ >= 0 && !holder_busy[occ] && avatar(occ).carried >= 0) candidates.push_back({avatar(occ).carried, p, occ});
      };
      collect(a);
      const std::size_t at_anchor = candidates.size();
      if (at_anchor == 0) break;
      for (int dr = -radius_; dr <= radius_; ++dr) {
        for (int dc = -radius_; dc <= radius_; ++dc) {
          const Position p = a + Position{dr, dc};
          if ((dr != 0 || dc != 0) && in_reach(p)) collect(p);
        }
      }
      std::vector<std::size_t> picked;
      std::vector<std::uint8_t> taken(candidates.size(), 0);
      for (int species : rx.reactants) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (taken[i] || candidates[i].species != species) continue;
          taken[i] = 1;
          picked.push_back(i);
          break;
        }
      }
      // The first reactant must sit at the anchor so that each group is
      // considered from a single place.
      if (picked.size() != rx.reactants.size() || picked.front() >= at_anchor) continue;

      bool held = false;
      for (std::size_t i : picked) held = held || candidates[i].holder >= 0;
      const double rate = held ? rx.rate_inventory : rx.rate_world;
      if (rate <= 0.0) continue;
      const auto key = static_cast<std::uint64_t>(anchor) * static_cast<std::uint64_t>(nr) + r;
      if (!state_.rng.bernoulli(rate, Stream::kReaction, state_.step, key)) continue;

      // Product slots: emptied hands, then emptied cells, then the nearest
      // free cells around the anchor.
      std::vector<int> hands;
      std::vector<int> slots;
      for (std::size_t i : picked) {
        if (candidates[i].holder >= 0) hands.push_back(candidates[i].holder);
        else slots.push_back(state_.index(candidates[i].pos));
      }
      const std::size_t need = rx.products.size();
      if (hands.size() + slots.size() < need) {
        for (int ring = 1; ring <= radius_ + 1 && hands.size() + slots.size() < need; ++ring) {
          for (int dr = -ring; dr <= ring; ++dr) {
            for (int dc = -ring; dc <= ring; ++dc) {
              if (std::max(std::abs(dr), std::abs(dc)) != ring) continue;
              const Position p = a + Position{dr, dc};
              if (!in_reach(p)) continue;
              const int idx = state_.index(p);
              if (cell_busy[idx] || !state_.items[idx].empty() || state_.occupant[idx] != -1) continue;
              if (std::find(slots.begin(), slots.end(), idx) != slots.end()) continue;
              slots.push_back(idx);
            }
          }
        }
      }
      if (hands.size() + slots.size() < need) continue;

      std::vector<int> rewarded;
      for (std::size_t i : picked) {
        const Token& t = candidates[i];
        if (t.holder >= 0) {
          avatar(t.holder).carried = -1;
          holder_busy[t.holder] = 1;
          rewarded.push_back(t.holder);
        } else {
          const int idx = state_.index(t.pos);
          state_.items[idx] = Item{};
          cell_busy[idx] = 1;
        }
      }
      std::size_t k = 0;
      for (int h : hands) {
        if (k == need) break;
        avatar(h).carried = rx.products[k++];
      }
      for (int idx : slots) {
        if (k == need) break;
        state_.items[idx] = Item{ItemKind::kMolecule, static_cast<std::uint8_t>(rx.products[k++]), 0};
        cell_busy[idx] = 1;
      }
      if (rewarded.empty()) {
        emit(events::kReactionFired, -1, -1, a).with("reaction", r);
      } else {
        for (int h : rewarded) {
          auto e = make_event(events::kReactionFired, h, -1, a);
          e.with("reaction", r);
          reward(h, rx.reward, std::move(e));
        }
      }
    }
  }
}

CellLook Chemistry::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  const auto& item = state_.item_at(p);
  if (item.kind == ItemKind::kMolecule) {
    look.shape = Shape::kRing;
    look.foreground = palette::species_color(item.variant);
  }
  return look;
}

AvatarLook Chemistry::avatar_look(int player) const {
  AvatarLook look = Substrate::avatar_look(player);
  if (avatar(player).carried >= 0) look.mark = palette::species_color(avatar(player).carried);
  return look;
}

}  // namespace socialgrid
