#include "dgg/io.hpp"

#include "dgg/error.hpp"
#include "dgg/lattice.hpp"

#include <charconv>
#include <sstream>

namespace dgg {

using nlohmann::json;

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::uint64_t parse_u64(std::string_view text, std::string_view context) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::Parse, "malformed number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return v;
}

json subgroup_json(const Subgroup& s) { return json(s); }

json fingerprint_json(const GroupFingerprint& fp) {
  return {{"order", fp.order},
          {"class_sizes", fp.class_sizes},
          {"degrees", fp.degrees},
          {"element_orders", fp.element_orders}};
}

}  // namespace

json to_json(const BigInt& v) { return v.str(); }

json graph_to_json(const GradedGraph& g) {
  json vs = json::array(), es = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back({{"id", g.label(v)}, {"rank", g.rank(v)}});
  for (const auto& e : g.edges()) es.push_back({{"a", g.label(e.lower)}, {"b", g.label(e.upper)}, {"m", e.m}});
  return {{"vertices", vs}, {"edges", es}};
}

GradedGraph graph_from_json(const json& j) {
  return guarded("graph JSON", [&] {
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    for (const auto& v : j.at("vertices")) vs.push_back({v.at("id").get<std::string>(), v.at("rank").get<int>()});
    for (const auto& e : j.at("edges")) {
      const auto m = e.at("m").get<std::int64_t>();
      if (m < 0) fail(ErrorCode::InvalidArgument, "negative edge multiplicity");
      es.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(), static_cast<std::uint64_t>(m)});
    }
    return GradedGraph::build(vs, es);
  });
}

std::string graph_to_dot(const GradedGraph& g) {
  std::ostringstream os;
  os << "graph P {\n";
  for (int n = 0; n <= g.max_rank(); ++n) {
    os << "  subgraph cluster_rank_" << n << " {\n    rank=same;\n    label=\"rank " << n << "\";\n";
    for (VertexId v = g.rank_begin(n); v < g.rank_end(n); ++v) os << "    " << dot_quote(g.label(v)) << ";\n";
    os << "  }\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << dot_quote(g.label(e.lower)) << " -- " << dot_quote(g.label(e.upper));
    if (e.m > 1) os << " [label=\"" << e.m << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

FiniteGroup group_from_json(const json& j) {
  return guarded("group JSON", [&] {
    const std::string name = j.value("name", std::string{});
    if (j.contains("cayley")) return FiniteGroup::from_cayley(j.at("cayley").get<std::vector<std::vector<int>>>(), name);
    if (j.contains("permutations")) {
      return FiniteGroup::from_permutations(j.at("permutations").get<std::vector<std::vector<int>>>(), name);
    }
    fail(ErrorCode::Parse, "group JSON needs a 'cayley' or 'permutations' member");
  });
}

FiniteGroup group_from_ref(const json& j) {
  if (j.is_string()) return group_by_name(j.get<std::string>());
  if (j.is_object()) return group_from_json(j);
  fail(ErrorCode::Parse, "group reference must be a name or an object");
}

Tower tower_from_json(const json& j) {
  return guarded("tower JSON", [&] {
    std::vector<FiniteGroup> levels;
    for (const auto& ref : j.at("levels")) levels.push_back(group_from_ref(ref));
    std::vector<Embedding> embeddings;
    const auto& maps = j.at("embeddings");
    if (maps.size() + 1 != levels.size()) fail(ErrorCode::InvalidArgument, "need one embedding per consecutive pair of levels");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      embeddings.push_back(Embedding::make(levels[i], levels[i + 1], maps[i].get<std::vector<Elem>>()));
    }
    return Tower::make(std::move(levels), std::move(embeddings));
  });
}

GradedGraph builtin_graph(std::string_view name, int max_rank) {
  auto colon = name.find(':');
  std::string_view head = name.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  if (head == "young" && colon == std::string_view::npos) return young_lattice(max_rank);
  if (head == "young-power") return young_power(static_cast<int>(parse_u64(arg, name)), max_rank);
  if (head == "scaled") return scale(young_lattice(max_rank), parse_u64(arg, name));
  if (head == "wreath") {
    std::vector<std::uint64_t> dims;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      auto comma = arg.find(',', pos);
      if (comma == std::string_view::npos) comma = arg.size();
      dims.push_back(parse_u64(arg.substr(pos, comma - pos), name));
      pos = comma + 1;
    }
    return wreath_graph(dims, max_rank);
  }
  fail(ErrorCode::Parse, "unknown built-in graph '" + std::string(name) + "'");
}

json to_json(const DualityReport& r, const GradedGraph& g) {
  json viol = json::array();
  for (const auto& v : r.violations) {
    viol.push_back({{"rank", v.rank}, {"x", g.label(v.x)}, {"y", g.label(v.y)}, {"lhs", to_json(v.lhs)},
                    {"rhs", to_json(v.rhs)}});
  }
  return {{"r", r.r}, {"checked_ranks", r.checked_ranks}, {"violations", viol}, {"ok", r.ok()}};
}

json to_json(const CharacterTable& t) {
  json classes = json::array();
  for (const auto& c : t.class_info()) classes.push_back({{"representative", c.representative}, {"size", c.size}});
  return {{"group", t.group.name()}, {"order", t.group.order()}, {"prime", t.prime},
          {"classes", classes},      {"degrees", t.degrees},        {"values", t.values}};
}

json to_json(const TowerReport& r) {
  json levels = json::array();
  for (const auto& v : r.levels) {
    json viol = json::array();
    for (const auto& x : v.violations) {
      viol.push_back({{"x", r.bratteli.label(x.x)}, {"y", r.bratteli.label(x.y)}, {"lhs", to_json(x.lhs)},
                      {"rhs", to_json(x.rhs)}});
    }
    json entry = {{"level", v.level}, {"checked", v.checked}, {"violations", viol}};
    if (v.checked) {
      entry["ok"] = v.ok;
    } else {
      entry["note"] = "top level: no level above it, relation not checkable";
    }
    levels.push_back(entry);
  }
  json orders = json::array();
  for (const auto& o : r.orders) {
    orders.push_back({{"level", o.level}, {"order", o.order}, {"expected", to_json(o.expected)}, {"ok", o.ok}});
  }
  return {{"r", r.r},
          {"levels", levels},
          {"orders", orders},
          {"commutator_ok", r.commutator_ok()},
          {"orders_ok", r.orders_ok()},
          {"passed", r.passed()}};
}

json to_json(const Rank2Classification& c) {
  json cands = json::array();
  for (const auto& x : c.candidates) {
    json entry = {{"group", x.group}, {"subgroup", subgroup_json(x.subgroup)}, {"passed", x.passed}};
    if (!x.passed) entry["reason"] = x.reason;
    cands.push_back(entry);
  }
  json survivors = json::array();
  for (const auto& s : c.survivors) {
    json subs = json::array();
    for (const auto& h : s.subgroups) subs.push_back(subgroup_json(h));
    survivors.push_back({{"group", s.group},
                         {"fingerprint", fingerprint_json(s.fingerprint)},
                         {"subgroups", subs},
                         {"is_wreath", s.is_wreath},
                         {"young_power_match", s.young_power_match}});
  }
  return {{"r", c.r}, {"candidates", cands}, {"survivors", survivors}};
}

json to_json(const WreathReport& w) {
  return {{"r", w.r}, {"dims", w.dims}, {"tower", to_json(w.tower)}, {"isomorphic", w.isomorphic}, {"passed", w.passed()}};
}

json to_json(const PathPair& pp) {
  json p = json::array(), q = json::array();
  for (const auto& x : pp.p_path) p.push_back(x.to_string());
  for (const auto& x : pp.q_path) q.push_back(x.to_string());
  return {{"p_path", p}, {"q_path", q}};
}

json to_json(const Tableau& t) { return json(t); }

PathPair path_pair_from_json(const json& j) {
  return guarded("path pair JSON", [&] {
    PathPair pp;
    for (const auto& s : j.at("p_path")) pp.p_path.push_back(PartitionTuple::parse(s.get<std::string>()));
    for (const auto& s : j.at("q_path")) pp.q_path.push_back(PartitionTuple::parse(s.get<std::string>()));
    return pp;
  });
}

}  // namespace dgg
