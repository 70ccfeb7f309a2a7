#include "dgg/dgg.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dgg_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("c api");

TEST_CASE("graph handles") {
  dgg_graph* y = nullptr;
  REQUIRE(dgg_graph_builtin("young", 6, &y) == DGG_OK);
  int top = 0;
  CHECK(dgg_graph_max_rank(y, &top) == DGG_OK);
  CHECK(top == 6);
  size_t size = 0;
  CHECK(dgg_graph_rank_size(y, 4, &size) == DGG_OK);
  CHECK(size == 5);

  int holds = 0;
  char* report = nullptr;
  CHECK(dgg_graph_check_duality(y, 1, 0, 5, &holds, &report) == DGG_OK);
  CHECK(holds == 1);
  CHECK(json::parse(take(report))["violations"].empty());

  char* sum = nullptr;
  CHECK(dgg_graph_sum_of_squares(y, 6, &sum) == DGG_OK);
  CHECK(take(sum) == "720");
  char* e = nullptr;
  CHECK(dgg_graph_path_count(y, "3,2,1", &e) == DGG_OK);
  CHECK(take(e) == "16");

  char* js = nullptr;
  REQUIRE(dgg_graph_to_json(y, &js) == DGG_OK);
  dgg_graph* back = nullptr;
  REQUIRE(dgg_graph_from_json(js, &back) == DGG_OK);
  dgg_string_free(js);
  int equal = 0;
  CHECK(dgg_graph_equal(y, back, &equal) == DGG_OK);
  CHECK(equal == 1);

  dgg_graph* yy = nullptr;
  REQUIRE(dgg_graph_product(y, y, &yy) == DGG_OK);
  dgg_graph* w = nullptr;
  REQUIRE(dgg_graph_builtin("young-power:2", 6, &w) == DGG_OK);
  int found = 0;
  char* mapping = nullptr;
  CHECK(dgg_graph_isomorphic(yy, w, &found, &mapping) == DGG_OK);
  CHECK(found == 1);
  CHECK(json::parse(take(mapping)).size() > 0);

  dgg_graph* t = nullptr;
  REQUIRE(dgg_graph_truncate(y, 2, &t) == DGG_OK);
  dgg_graph* s = nullptr;
  REQUIRE(dgg_graph_scale(t, 2, &s) == DGG_OK);
  char* dot = nullptr;
  CHECK(dgg_graph_to_dot(s, &dot) == DGG_OK);
  CHECK(take(dot).find("label=\"2\"") != std::string::npos);

  CHECK(dgg_graph_lemma_checks(y, 3, &holds, &report) == DGG_OK);
  CHECK(holds == 1);
  dgg_string_free(report);

  for (dgg_graph* g : {y, back, yy, w, t, s}) dgg_graph_free(g);
}

TEST_CASE("errors map to status codes") {
  dgg_graph* g = nullptr;
  CHECK(dgg_graph_builtin("nope", 3, &g) == DGG_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(dgg_last_error()).find("nope") != std::string::npos);
  CHECK(dgg_graph_from_json("{not json", &g) == DGG_ERR_PARSE);
  CHECK(dgg_graph_builtin(nullptr, 3, &g) == DGG_ERR_NULL_POINTER);
  CHECK(dgg_graph_max_rank(nullptr, nullptr) == DGG_ERR_NULL_POINTER);
  char* out = nullptr;
  const int bad[] = {1, 1};
  CHECK(dgg_rsk(bad, 2, &out) == DGG_ERR_INVALID_ARGUMENT);
  size_t n = 0;
  CHECK(dgg_classify_rank2(4, 1, &n, &out) == DGG_ERR_UNSUPPORTED);
  CHECK(std::string(dgg_status_name(DGG_ERR_ENGINE)).size() > 0);
  dgg_graph_free(nullptr);
  dgg_string_free(nullptr);
}

TEST_CASE("bijections") {
  const int sigma[] = {3, 1, 2};
  char* out = nullptr;
  REQUIRE(dgg_rsk(sigma, 3, &out) == DGG_OK);
  auto j = json::parse(take(out));
  CHECK(j["P"] == json::parse("[[1,2],[3]]"));
  CHECK(j["Q"] == json::parse("[[1,3],[2]]"));

  REQUIRE(dgg_rsk_growth(sigma, 3, &out) == DGG_OK);
  CHECK(json::parse(take(out))["p_path"].back() == "2,1");

  REQUIRE(dgg_colored_rsk("3^0 1^1 2^0", 2, &out) == DGG_OK);
  const std::string paths = take(out);
  REQUIRE(dgg_colored_rsk_inverse(paths.c_str(), 2, &out) == DGG_OK);
  CHECK(take(out) == "3^0 1^1 2^0");
}

TEST_CASE("groups and towers") {
  dgg_group* h = nullptr;
  REQUIRE(dgg_group_by_name("S3", &h) == DGG_OK);
  size_t order = 0;
  CHECK(dgg_group_order(h, &order) == DGG_OK);
  CHECK(order == 6);
  char* name = nullptr;
  CHECK(dgg_group_name(h, &name) == DGG_OK);
  CHECK(take(name) == "S3");
  char* table = nullptr;
  CHECK(dgg_group_character_table(h, &table) == DGG_OK);
  CHECK(json::parse(take(table))["degrees"].size() == 3);

  dgg_tower* t = nullptr;
  REQUIRE(dgg_tower_wreath(h, 2, &t) == DGG_OK);
  size_t levels = 0;
  CHECK(dgg_tower_levels(t, &levels) == DGG_OK);
  CHECK(levels == 3);
  int passed = 0;
  char* report = nullptr;
  CHECK(dgg_tower_check(t, 6, &passed, &report) == DGG_OK);
  CHECK(passed == 1);
  dgg_string_free(report);
  dgg_graph* b = nullptr;
  CHECK(dgg_tower_bratteli(t, &b) == DGG_OK);
  dgg_graph_free(b);
  CHECK(dgg_verify_wreath(h, 2, &passed, &report) == DGG_OK);
  CHECK(passed == 1);
  dgg_string_free(report);
  dgg_tower_free(t);
  dgg_group_free(h);

  dgg_group* c = nullptr;
  REQUIRE(dgg_group_from_json(R"({"cayley":[[0,1],[1,0]]})", &c) == DGG_OK);
  dgg_group_free(c);

  dgg_tower* q = nullptr;
  REQUIRE(dgg_tower_from_json(R"({"levels":["1","C2","Q8"],"embeddings":[[0],[0,4]]})", &q) == DGG_OK);
  CHECK(dgg_tower_check(q, 2, &passed, &report) == DGG_OK);
  CHECK(passed == 0);
  dgg_string_free(report);
  dgg_tower_free(q);

  char* names = nullptr;
  CHECK(dgg_group_catalog_2r2(3, &names) == DGG_OK);
  CHECK(json::parse(take(names)).size() == 5);

  size_t survivors = 0;
  CHECK(dgg_classify_rank2(3, 2, &survivors, &report) == DGG_OK);
  CHECK(survivors == 1);
  dgg_string_free(report);
}

TEST_SUITE_END();
