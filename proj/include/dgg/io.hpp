#pragma once

// JSON and DOT encodings of graphs, groups, towers and reports.

#include "dgg/growth.hpp"
#include "dgg/tower.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace dgg {

// {"vertices":[{"id":str,"rank":int}],"edges":[{"a":str,"b":str,"m":int}]}
nlohmann::json graph_to_json(const GradedGraph& g);
GradedGraph graph_from_json(const nlohmann::json& j);

// Ranks as same-rank clusters; edges labelled with multiplicity when > 1.
std::string graph_to_dot(const GradedGraph& g);

// {"cayley": [[int]]} or {"permutations": [[int]]} (0-based images).
FiniteGroup group_from_json(const nlohmann::json& j);
// A catalog name string or an inline group object.
FiniteGroup group_from_ref(const nlohmann::json& j);

// {"levels":[group-ref,...],"embeddings":[[int,...],...]}
Tower tower_from_json(const nlohmann::json& j);

// Built-in graph names: young, young-power:R, scaled:D, wreath:d1,d2,...
GradedGraph builtin_graph(std::string_view name, int max_rank);

nlohmann::json to_json(const DualityReport& r, const GradedGraph& g);
nlohmann::json to_json(const CharacterTable& t);
nlohmann::json to_json(const TowerReport& r);
nlohmann::json to_json(const Rank2Classification& c);
nlohmann::json to_json(const WreathReport& w);
nlohmann::json to_json(const PathPair& pp);
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const BigInt& v);  // decimal string

PathPair path_pair_from_json(const nlohmann::json& j);

}  // namespace dgg
