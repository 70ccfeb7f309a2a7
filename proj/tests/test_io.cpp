#include "dgg/error.hpp"
#include "dgg/io.hpp"
#include "dgg/lattice.hpp"

#include <doctest.h>

using namespace dgg;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph JSON round trip") {
  for (const auto& g : {young_lattice(4), young_power(3, 3), scale(young_lattice(3), 3), wreath_graph({1, 2}, 3)}) {
    auto j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(json::parse(j.dump())) == g);
  }
}

TEST_CASE("graph JSON schema") {
  auto j = graph_to_json(scale(young_lattice(1), 2));
  REQUIRE(j["vertices"].size() == 2);
  CHECK(j["vertices"][0] == json{{"id", "-"}, {"rank", 0}});
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0] == json{{"a", "-"}, {"b", "1"}, {"m", 2}});

  CHECK_THROWS(graph_from_json(json::parse(R"({"vertices":[{"id":"0","rank":0},{"id":"a","rank":1}],"edges":[{"a":"0","b":"a"}]})")));

  CHECK_THROWS(graph_from_json(json::parse(R"({"vertices":[{"id":"0"}],"edges":[]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"vertices":[{"id":"0","rank":0}],"edges":[{"a":"0","b":"z","m":1}]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"([1,2])")));
}

TEST_CASE("DOT output") {
  auto dot = graph_to_dot(scale(young_lattice(2), 2));
  CHECK(dot.rfind("graph P {", 0) == 0);
  CHECK(dot.find("subgraph cluster_rank_2") != std::string::npos);
  CHECK(dot.find("rank=same;") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
  CHECK(graph_to_dot(young_lattice(2)).find("label=\"1\"") == std::string::npos);
}

TEST_CASE("built-in graph names") {
  CHECK(builtin_graph("young", 4) == young_lattice(4));
  CHECK(builtin_graph("young-power:2", 3) == young_power(2, 3));
  CHECK(builtin_graph("scaled:2", 3) == scale(young_lattice(3), 2));
  CHECK(builtin_graph("wreath:1,1,2", 2) == wreath_graph({1, 1, 2}, 2));
  CHECK_THROWS_AS(builtin_graph("petersen", 3), Error);
  CHECK_THROWS_AS(builtin_graph("young-power:x", 3), Error);
  CHECK_THROWS_AS(builtin_graph("young", -1), Error);
}

TEST_CASE("groups and towers from JSON") {
  auto c2 = group_from_json(json::parse(R"({"cayley":[[0,1],[1,0]],"name":"C2"})"));
  CHECK(c2.order() == 2);
  CHECK(c2.name() == "C2");
  auto s3 = group_from_json(json::parse(R"({"permutations":[[1,0,2],[1,2,0]]})"));
  CHECK(s3.order() == 6);
  CHECK(group_from_ref("D4").order() == 8);
  CHECK_THROWS(group_from_json(json::parse(R"({"table":[]})")));

  auto t = tower_from_json(json::parse(R"({"levels":["1","C2","C4"],"embeddings":[[0],[0,2]]})"));
  CHECK(t.top() == 2);
  CHECK_FALSE(check_dual_tower(t, 2).passed());
  CHECK_THROWS(tower_from_json(json::parse(R"({"levels":["1","C2","C4"],"embeddings":[[0],[0,1]]})")));
  CHECK_THROWS(tower_from_json(json::parse(R"({"levels":["1","C2"]})")));
}

TEST_CASE("path pair JSON round trip") {
  auto pp = colored_rsk(ColoredPermutation::parse("3^0 1^1 2^0", 2));
  auto j = to_json(pp);
  CHECK(j["p_path"].size() == 4);
  CHECK(path_pair_from_json(j) == pp);
}

TEST_CASE("report serialization") {
  auto y = young_lattice(3);
  auto j = to_json(check_duality(y, 2, 0, 2), y);
  CHECK(j["ok"] == false);
  CHECK_FALSE(j["violations"].empty());
  CHECK(j["violations"][0].contains("x"));
  CHECK(to_json(BigInt(40320)) == "40320");

  auto tj = to_json(check_dual_tower(symmetric_tower(3), 1));
  CHECK(tj["passed"] == true);
  CHECK(tj["levels"].back()["checked"] == false);
  CHECK(tj["levels"].back().contains("note"));
}

TEST_SUITE_END();
