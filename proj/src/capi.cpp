#include "dgg/dgg.h"

#include "dgg/error.hpp"
#include "dgg/growth.hpp"
#include "dgg/io.hpp"
#include "dgg/lattice.hpp"
#include "dgg/tower.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct dgg_graph {
  dgg::GradedGraph graph;
};

struct dgg_group {
  dgg::FiniteGroup group;
};

struct dgg_tower {
  dgg::Tower tower;
};

namespace {

thread_local std::string last_error;

dgg_status to_status(dgg::ErrorCode code) {
  switch (code) {
    case dgg::ErrorCode::InvalidArgument: return DGG_ERR_INVALID_ARGUMENT;
    case dgg::ErrorCode::OutOfRange: return DGG_ERR_OUT_OF_RANGE;
    case dgg::ErrorCode::Parse: return DGG_ERR_PARSE;
    case dgg::ErrorCode::Unsupported: return DGG_ERR_UNSUPPORTED;
    case dgg::ErrorCode::Engine: return DGG_ERR_ENGINE;
  }
  return DGG_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
dgg_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return DGG_OK;
  } catch (const dgg::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return DGG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DGG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DGG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DGG_ERR_INTERNAL;
  }
}

template <class... Ptrs>
bool null_args(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) {
    last_error = "null pointer argument";
    return true;
  }
  return false;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_json(const char* text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    dgg::fail(dgg::ErrorCode::Parse, e.what());
  }
}

dgg::Permutation to_permutation(const int* sigma, size_t n) {
  if (n > 0 && sigma == nullptr) dgg::fail(dgg::ErrorCode::InvalidArgument, "null permutation");
  return dgg::Permutation(sigma, sigma + n);
}

}  // namespace

extern "C" {

const char* dgg_version(void) { return "0.1.0"; }

const char* dgg_last_error(void) { return last_error.c_str(); }

const char* dgg_status_name(dgg_status status) {
  switch (status) {
    case DGG_OK: return "ok";
    case DGG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DGG_ERR_OUT_OF_RANGE: return "out of range";
    case DGG_ERR_PARSE: return "parse error";
    case DGG_ERR_UNSUPPORTED: return "unsupported";
    case DGG_ERR_ENGINE: return "engine failure";
    case DGG_ERR_NULL_POINTER: return "null pointer";
    case DGG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dgg_string_free(char* s) { std::free(s); }

dgg_status dgg_graph_builtin(const char* name, int max_rank, dgg_graph** out) {
  if (null_args(name, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{dgg::builtin_graph(name, max_rank)}; });
}

dgg_status dgg_graph_from_json(const char* json, dgg_graph** out) {
  if (null_args(json, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{dgg::graph_from_json(parse_json(json))}; });
}

dgg_status dgg_graph_product(const dgg_graph* p, const dgg_graph* q, dgg_graph** out) {
  if (null_args(p, q, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{dgg::product(p->graph, q->graph)}; });
}

dgg_status dgg_graph_scale(const dgg_graph* p, uint64_t d, dgg_graph** out) {
  if (null_args(p, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{dgg::scale(p->graph, d)}; });
}

dgg_status dgg_graph_truncate(const dgg_graph* p, int max_rank, dgg_graph** out) {
  if (null_args(p, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{p->graph.truncate(max_rank)}; });
}

void dgg_graph_free(dgg_graph* g) { delete g; }

dgg_status dgg_graph_max_rank(const dgg_graph* g, int* out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = g->graph.max_rank(); });
}

dgg_status dgg_graph_rank_size(const dgg_graph* g, int rank, size_t* out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = g->graph.rank_size(rank); });
}

dgg_status dgg_graph_to_json(const dgg_graph* g, char** out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = dup_string(dgg::graph_to_json(g->graph).dump()); });
}

dgg_status dgg_graph_to_dot(const dgg_graph* g, char** out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = dup_string(dgg::graph_to_dot(g->graph)); });
}

dgg_status dgg_graph_equal(const dgg_graph* p, const dgg_graph* q, int* equal) {
  if (null_args(p, q, equal)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *equal = p->graph == q->graph ? 1 : 0; });
}

dgg_status dgg_graph_check_duality(const dgg_graph* g, uint64_t r, int first, int last, int* holds,
                                   char** report_json) {
  if (null_args(g, holds, report_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto report = dgg::check_duality(g->graph, r, first, last);
    std::string text = dgg::to_json(report, g->graph).dump();
    *report_json = dup_string(text);
    *holds = report.ok() ? 1 : 0;
  });
}

dgg_status dgg_graph_path_count(const dgg_graph* g, const char* label, char** decimal) {
  if (null_args(g, label, decimal)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *decimal = dup_string(dgg::path_count(g->graph, g->graph.at(label)).str()); });
}

dgg_status dgg_graph_sum_of_squares(const dgg_graph* g, int rank, char** decimal) {
  if (null_args(g, decimal)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *decimal = dup_string(dgg::sum_of_squares(g->graph, rank).str()); });
}

dgg_status dgg_graph_lemma_checks(const dgg_graph* g, int rank, int* holds, char** report_json) {
  if (null_args(g, holds, report_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto violations = dgg::lemma_checks(g->graph, rank);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : violations) {
      list.push_back({{"part", v.part == dgg::LemmaPart::CommonCovers ? "a" : "b"},
                      {"x", g->graph.label(v.x)},
                      {"y", g->graph.label(v.y)},
                      {"detail", v.detail}});
    }
    *report_json = dup_string(nlohmann::json{{"rank", rank}, {"violations", list}}.dump());
    *holds = violations.empty() ? 1 : 0;
  });
}

dgg_status dgg_graph_isomorphic(const dgg_graph* p, const dgg_graph* q, int* found, char** mapping_json) {
  if (null_args(p, q, found)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto map = dgg::graphs_isomorphic(p->graph, q->graph);
    *found = map ? 1 : 0;
    if (mapping_json) {
      nlohmann::json m = nlohmann::json::object();
      if (map) {
        for (dgg::VertexId v = 0; v < map->size(); ++v) m[p->graph.label(v)] = q->graph.label((*map)[v]);
      }
      *mapping_json = dup_string(m.dump());
    }
  });
}

dgg_status dgg_rsk(const int* sigma, size_t n, char** json) {
  if (null_args(json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto t = dgg::rsk_insert(to_permutation(sigma, n));
    *json = dup_string(nlohmann::json{{"P", dgg::to_json(t.p)}, {"Q", dgg::to_json(t.q)}}.dump());
  });
}

dgg_status dgg_rsk_growth(const int* sigma, size_t n, char** json) {
  if (null_args(json)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *json = dup_string(dgg::to_json(dgg::rsk_growth(to_permutation(sigma, n))).dump()); });
}

dgg_status dgg_colored_rsk(const char* word, int r, char** json) {
  if (null_args(word, json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto w = dgg::ColoredPermutation::parse(word, r);
    *json = dup_string(dgg::to_json(dgg::colored_rsk(w)).dump());
  });
}

dgg_status dgg_colored_rsk_inverse(const char* path_pair_json, int r, char** word) {
  if (null_args(path_pair_json, word)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto pp = dgg::path_pair_from_json(parse_json(path_pair_json));
    *word = dup_string(dgg::colored_rsk_inverse(pp, r).to_string());
  });
}

dgg_status dgg_group_by_name(const char* name, dgg_group** out) {
  if (null_args(name, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_group{dgg::group_by_name(name)}; });
}

dgg_status dgg_group_from_json(const char* json, dgg_group** out) {
  if (null_args(json, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_group{dgg::group_from_ref(parse_json(json))}; });
}

void dgg_group_free(dgg_group* g) { delete g; }

dgg_status dgg_group_order(const dgg_group* g, size_t* out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = g->group.order(); });
}

dgg_status dgg_group_name(const dgg_group* g, char** out) {
  if (null_args(g, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = dup_string(g->group.name()); });
}

dgg_status dgg_group_catalog_2r2(int r, char** names_json) {
  if (null_args(names_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& g : dgg::catalog_order_2r2(r)) names.push_back(g.name());
    *names_json = dup_string(names.dump());
  });
}

dgg_status dgg_group_character_table(const dgg_group* g, char** json) {
  if (null_args(g, json)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *json = dup_string(dgg::to_json(dgg::character_table(g->group)).dump()); });
}

dgg_status dgg_tower_from_json(const char* json, dgg_tower** out) {
  if (null_args(json, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_tower{dgg::tower_from_json(parse_json(json))}; });
}

dgg_status dgg_tower_wreath(const dgg_group* h, int max_level, dgg_tower** out) {
  if (null_args(h, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_tower{dgg::wreath_tower(h->group, max_level)}; });
}

void dgg_tower_free(dgg_tower* t) { delete t; }

dgg_status dgg_tower_levels(const dgg_tower* t, size_t* out) {
  if (null_args(t, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = t->tower.levels().size(); });
}

dgg_status dgg_tower_bratteli(const dgg_tower* t, dgg_graph** out) {
  if (null_args(t, out)) return DGG_ERR_NULL_POINTER;
  return guard([&] { *out = new dgg_graph{dgg::build_bratteli(t->tower)}; });
}

dgg_status dgg_tower_check(const dgg_tower* t, uint64_t r, int* passed, char** report_json) {
  if (null_args(t, passed, report_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto report = dgg::check_dual_tower(t->tower, r);
    *report_json = dup_string(dgg::to_json(report).dump());
    *passed = report.passed() ? 1 : 0;
  });
}

dgg_status dgg_classify_rank2(int r, unsigned threads, size_t* survivors, char** report_json) {
  if (null_args(survivors, report_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto c = dgg::classify_rank2(r, threads);
    *report_json = dup_string(dgg::to_json(c).dump());
    *survivors = c.survivors.size();
  });
}

dgg_status dgg_verify_wreath(const dgg_group* h, int max_level, int* passed, char** report_json) {
  if (null_args(h, passed, report_json)) return DGG_ERR_NULL_POINTER;
  return guard([&] {
    auto w = dgg::verify_wreath_tower(h->group, max_level);
    *report_json = dup_string(dgg::to_json(w).dump());
    *passed = w.passed() ? 1 : 0;
  });
}

}  // extern "C"
