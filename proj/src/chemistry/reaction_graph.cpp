#include "socialgrid/chemistry/reaction_graph.hpp"

#include "socialgrid/core/types.hpp"

namespace socialgrid {

int ReactionGraph::species_index(const std::string& s) const {
  for (std::size_t i = 0; i < species.size(); ++i) {
    if (species[i] == s) return static_cast<int>(i);
  }
  throw ConfigError("reaction graph '" + name + "': undeclared species '" + s + "'");
}

ReactionGraph ReactionGraph::from_json(const nlohmann::json& j) {
  ReactionGraph g;
  g.name = j.value("name", std::string("graph"));
  g.species = j.at("species").get<std::vector<std::string>>();
  if (g.species.empty()) throw ConfigError("reaction graph '" + g.name + "' declares no species");
  if (g.species.size() > 255) throw ConfigError("reaction graph '" + g.name + "' has too many species");
  for (const auto& r : j.at("reactions")) {
    Reaction rx;
    rx.name = r.value("name", std::string("r") + std::to_string(g.reactions.size()));
    for (const auto& s : r.at("reactants")) rx.reactants.push_back(g.species_index(s.get<std::string>()));
    for (const auto& s : r.at("products")) rx.products.push_back(g.species_index(s.get<std::string>()));
    rx.rate_world = r.value("rate_world", 0.0);
    rx.rate_inventory = r.value("rate_inventory", rx.rate_world);
    rx.reward = r.value("reward", 0.0);
    if (rx.reactants.empty()) throw ConfigError("reaction '" + rx.name + "' has no reactants");
    for (double rate : {rx.rate_world, rx.rate_inventory}) {
      if (rate < 0.0 || rate > 1.0) throw ConfigError("reaction '" + rx.name + "': rates must lie in [0, 1]");
    }
    g.reactions.push_back(std::move(rx));
  }
  return g;
}

}  // namespace socialgrid
