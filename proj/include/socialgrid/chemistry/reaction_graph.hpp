#ifndef SOCIALGRID_CHEMISTRY_REACTION_GRAPH_HPP_
#define SOCIALGRID_CHEMISTRY_REACTION_GRAPH_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace socialgrid {

struct Reaction {
  std::string name;
  std::vector<int> reactants;  // species indices, a multiset
  std::vector<int> products;
  double rate_world = 0.0;      // per-step firing probability on the ground
  double rate_inventory = 0.0;  // used when a held molecule takes part
  double reward = 0.0;          // paid to each player whose held molecule reacts
};

struct ReactionGraph {
  std::string name;
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  // Index of the named species; throws ConfigError when undeclared.
  int species_index(const std::string& s) const;

  // {"name", "species": [...], "reactions": [{"name", "reactants", "products",
  //  "rate_world", "rate_inventory", "reward"}]}
  static ReactionGraph from_json(const nlohmann::json& j);
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CHEMISTRY_REACTION_GRAPH_HPP_
