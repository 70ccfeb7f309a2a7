// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
// error.

#include "dgg/dgg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dgg_status s) {
  if (s != DGG_OK) throw InputError(std::string(dgg_status_name(s)) + ": " + dgg_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { dgg_string_free(s); }
};
struct GraphDeleter {
  void operator()(dgg_graph* g) const { dgg_graph_free(g); }
};
struct GroupDeleter {
  void operator()(dgg_group* g) const { dgg_group_free(g); }
};
struct TowerDeleter {
  void operator()(dgg_tower* t) const { dgg_tower_free(t); }
};
using Graph = std::unique_ptr<dgg_graph, GraphDeleter>;
using Group = std::unique_ptr<dgg_group, GroupDeleter>;
using TowerPtr = std::unique_ptr<dgg_tower, TowerDeleter>;

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

struct GraphSource {
  std::string name;
  std::string file;
  int max_rank = 6;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph", name, "young | young-power:R | scaled:D | wreath:d1,d2,...");
    cmd->add_option("--graph-file", file, "graph JSON file");
    cmd->add_option("--max-rank", max_rank, "truncation rank for built-in graphs")->capture_default_str();
  }

  Graph load() const {
    dgg_graph* g = nullptr;
    if (!file.empty()) {
      check(dgg_graph_from_json(read_file(file).c_str(), &g));
    } else if (!name.empty()) {
      check(dgg_graph_builtin(name.c_str(), max_rank, &g));
    } else {
      throw InputError("one of --graph or --graph-file is required");
    }
    return Graph(g);
  }
};

struct TowerSource {
  std::string file;
  std::string wreath;
  int max_level = 3;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--tower", file, "tower JSON file");
    cmd->add_option("--wreath", wreath, "base group H of the tower H wr S_n (catalog name)");
    cmd->add_option("--max-level", max_level, "top level of the wreath tower")->capture_default_str();
  }

  TowerPtr load() const {
    dgg_tower* t = nullptr;
    if (!file.empty()) {
      check(dgg_tower_from_json(read_file(file).c_str(), &t));
    } else if (!wreath.empty()) {
      dgg_group* h = nullptr;
      check(dgg_group_by_name(wreath.c_str(), &h));
      Group owned(h);
      check(dgg_tower_wreath(h, max_level, &t));
    } else {
      throw InputError("one of --tower or --wreath is required");
    }
    return TowerPtr(t);
  }
};

std::string to_string(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

int run_check_dual(const GraphSource& src, std::uint64_t r, int first, int last, bool as_json) {
  Graph g = src.load();
  int top = 0;
  check(dgg_graph_max_rank(g.get(), &top));
  if (last < 0) last = top - 1;
  int holds = 0;
  char* report = nullptr;
  check(dgg_graph_check_duality(g.get(), r, first, last, &holds, &report));
  json j = json::parse(take(report));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "DU - UD = " << r << "I on ranks [" << first << ", " << last << "]: "
              << (holds ? "holds" : "violated") << "\n";
    for (const auto& v : j["violations"]) {
      std::cout << "  rank " << v["rank"] << ": (" << to_string(v["x"]) << ", " << to_string(v["y"])
                << ") lhs=" << to_string(v["lhs"]) << " rhs=" << to_string(v["rhs"]) << "\n";
    }
  }
  return holds ? kOk : kCheckFailed;
}

// r^n n! as a decimal string, computed without the library.
std::string expected_count(std::uint64_t r, int n) {
  std::vector<unsigned> digits{1};  // little-endian base 10
  auto times = [&](std::uint64_t k) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      std::uint64_t v = d * k + carry;
      d = static_cast<unsigned>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<unsigned>(carry % 10));
      carry /= 10;
    }
  };
  for (int k = 1; k <= n; ++k) {
    times(r);
    times(static_cast<std::uint64_t>(k));
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

int run_sum_squares(const GraphSource& src, int rank, std::uint64_t r, bool as_json) {
  Graph g = src.load();
  char* value = nullptr;
  check(dgg_graph_sum_of_squares(g.get(), rank, &value));
  const std::string sum = take(value);
  json j = {{"rank", rank}, {"sum_of_squares", sum}};
  bool ok = true;
  if (r > 0) {
    const std::string expected = expected_count(r, rank);
    ok = expected == sum;
    j["r"] = r;
    j["expected"] = expected;
    j["match"] = ok;
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sum of e(x)^2 over rank " << rank << ": " << sum << "\n";
    if (r > 0) std::cout << "r^n n! = " << j["expected"].get<std::string>() << ": " << (ok ? "match" : "MISMATCH") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

std::string rows_text(const json& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(rows[i][k].get<int>());
    }
    s += "]";
  }
  return s + "]";
}

int run_rsk(const std::vector<int>& sigma, bool as_json) {
  char* out = nullptr;
  check(dgg_rsk(sigma.data(), sigma.size(), &out));
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "P=" << rows_text(j["P"]) << " Q=" << rows_text(j["Q"]) << "\n";
  }
  return kOk;
}

int run_colored_rsk(const std::vector<std::string>& word, const std::string& inverse_file, int r, bool as_json) {
  if (!inverse_file.empty()) {
    char* out = nullptr;
    check(dgg_colored_rsk_inverse(read_file(inverse_file).c_str(), r, &out));
    const std::string w = take(out);
    if (as_json) {
      std::cout << json{{"word", w}}.dump() << "\n";
    } else {
      std::cout << w << "\n";
    }
    return kOk;
  }
  std::string text;
  for (const auto& tok : word) text += (text.empty() ? "" : " ") + tok;
  char* out = nullptr;
  check(dgg_colored_rsk(text.c_str(), r, &out));
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "p_path:\n";
    for (const auto& s : j["p_path"]) std::cout << "  " << s.get<std::string>() << "\n";
    std::cout << "q_path:\n";
    for (const auto& s : j["q_path"]) std::cout << "  " << s.get<std::string>() << "\n";
  }
  return kOk;
}

void print_graph_summary(dgg_graph* g) {
  int top = 0;
  check(dgg_graph_max_rank(g, &top));
  char* js = nullptr;
  check(dgg_graph_to_json(g, &js));
  json j = json::parse(take(js));
  std::cout << "max rank " << top << "\n";
  for (int n = 0; n <= top; ++n) {
    std::size_t size = 0;
    check(dgg_graph_rank_size(g, n, &size));
    std::cout << "  rank " << n << ": " << size << " vertices\n";
  }
  for (const auto& e : j["edges"]) {
    std::cout << "  " << e["a"].get<std::string>() << " -- " << e["b"].get<std::string>();
    if (e["m"].get<std::uint64_t>() > 1) std::cout << " (x" << e["m"].get<std::uint64_t>() << ")";
    std::cout << "\n";
  }
}

int run_bratteli(const TowerSource& src, const std::string& out_file, bool as_json) {
  TowerPtr t = src.load();
  dgg_graph* raw = nullptr;
  check(dgg_tower_bratteli(t.get(), &raw));
  Graph g(raw);
  char* js = nullptr;
  check(dgg_graph_to_json(g.get(), &js));
  const std::string text = json::parse(take(js)).dump(2) + "\n";
  if (!out_file.empty()) write_file(out_file, text);
  if (as_json) {
    std::cout << text;
  } else {
    print_graph_summary(g.get());
  }
  return kOk;
}

void print_tower_report(const json& j) {
  for (const auto& v : j["levels"]) {
    std::cout << "  level " << v["level"].get<int>() << ": ";
    if (!v["checked"].get<bool>()) {
      std::cout << "not checked (top level)\n";
      continue;
    }
    std::cout << (v["ok"].get<bool>() ? "Res Ind - Ind Res = rI" : "relation FAILS") << "\n";
    for (const auto& x : v["violations"]) {
      std::cout << "    (" << to_string(x["x"]) << ", " << to_string(x["y"]) << ") lhs=" << to_string(x["lhs"])
                << " rhs=" << to_string(x["rhs"]) << "\n";
    }
  }
  for (const auto& o : j["orders"]) {
    std::cout << "  |G_" << o["level"].get<int>() << "| = " << o["order"].get<std::uint64_t>() << ", r^n n! = "
              << o["expected"].get<std::string>() << (o["ok"].get<bool>() ? "" : "  MISMATCH") << "\n";
  }
}

int run_check_tower(const TowerSource& src, std::uint64_t r, bool as_json) {
  TowerPtr t = src.load();
  int passed = 0;
  char* report = nullptr;
  check(dgg_tower_check(t.get(), r, &passed, &report));
  json j = json::parse(take(report));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "tower, r = " << r << ": " << (passed ? "passes" : "fails") << "\n";
    print_tower_report(j);
  }
  return passed ? kOk : kCheckFailed;
}

int run_classify(int r, unsigned threads, bool as_json) {
  std::size_t survivors = 0;
  char* report = nullptr;
  check(dgg_classify_rank2(r, threads, &survivors, &report));
  json j = json::parse(take(report));
  bool ok = survivors == 1;
  for (const auto& s : j["survivors"]) ok = ok && s["is_wreath"].get<bool>() && s["young_power_match"].get<bool>();
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "r = " << r << ": " << j["candidates"].size() << " candidate towers {e} < C" << r << " < G2\n";
    for (const auto& c : j["candidates"]) {
      std::cout << "  " << c["group"].get<std::string>() << " over " << c["subgroup"].dump() << ": "
                << (c["passed"].get<bool>() ? "passes" : "fails (" + c["reason"].get<std::string>() + ")") << "\n";
    }
    for (const auto& s : j["survivors"]) {
      std::cout << "survivor: " << s["group"].get<std::string>() << "\n"
                << "  wreath product C" << r << "wrS2: " << (s["is_wreath"].get<bool>() ? "yes" : "no") << "\n"
                << "  P_[0,2] isomorphic to (Y^" << r << ")_[0,2]: " << (s["young_power_match"].get<bool>() ? "yes" : "no")
                << "\n";
    }
    if (survivors == 0) std::cout << "no survivors\n";
  }
  return ok ? kOk : kCheckFailed;
}

int run_verify_wreath(const std::string& name, int max_level, bool as_json) {
  dgg_group* h = nullptr;
  check(dgg_group_by_name(name.c_str(), &h));
  Group owned(h);
  int passed = 0;
  char* report = nullptr;
  check(dgg_verify_wreath(h, max_level, &passed, &report));
  json j = json::parse(take(report));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << name << " wreath tower through level " << max_level << ", r = " << j["r"].get<std::uint64_t>() << ": "
              << (passed ? "passes" : "fails") << "\n";
    print_tower_report(j["tower"]);
    std::cout << "  Bratteli diagram isomorphic to wreath graph " << j["dims"].dump() << ": "
              << (j["isomorphic"].get<bool>() ? "yes" : "no") << "\n";
  }
  return passed ? kOk : kCheckFailed;
}

std::string twin_path(const std::string& out) {
  auto dot = out.rfind('.');
  auto slash = out.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".json";
  return out + ".json";
}

int run_export_dot(const GraphSource& gsrc, const TowerSource& tsrc, const std::string& out_file) {
  Graph g;
  if (!tsrc.file.empty() || !tsrc.wreath.empty()) {
    TowerPtr t = tsrc.load();
    dgg_graph* raw = nullptr;
    check(dgg_tower_bratteli(t.get(), &raw));
    g.reset(raw);
  } else {
    g = gsrc.load();
  }
  char* dot = nullptr;
  check(dgg_graph_to_dot(g.get(), &dot));
  const std::string dot_text = take(dot);
  if (out_file.empty()) {
    std::cout << dot_text;
    return kOk;
  }
  char* js = nullptr;
  check(dgg_graph_to_json(g.get(), &js));
  write_file(out_file, dot_text);
  write_file(twin_path(out_file), json::parse(take(js)).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual graded graphs, RSK bijections and r-dual towers of groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  GraphSource graph_src;
  TowerSource tower_src;

  auto* check_dual = app.add_subcommand("check-dual", "check DU - UD = rI on a graded graph");
  graph_src.add_to(check_dual);
  std::uint64_t r = 1;
  int first = 0, last = -1;
  check_dual->add_option("--r", r, "duality parameter")->capture_default_str();
  check_dual->add_option("--from", first, "first rank of the window")->capture_default_str();
  check_dual->add_option("--to", last, "last rank of the window (default max rank - 1)");
  check_dual->add_flag("--json", as_json);

  auto* sum_sq = app.add_subcommand("sum-squares", "sum of e(x)^2 over one rank");
  GraphSource sum_src;
  sum_src.add_to(sum_sq);
  int rank = 0;
  std::uint64_t sum_r = 0;
  sum_sq->add_option("--rank", rank, "rank n")->required();
  sum_sq->add_option("--r", sum_r, "compare against r^n n!");
  sum_sq->add_flag("--json", as_json);

  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted by row insertion");
  std::vector<int> sigma;
  rsk->add_option("permutation", sigma, "one-line permutation of 1..n")->required();
  rsk->add_flag("--json", as_json);

  auto* colored = app.add_subcommand("colored-rsk", "colored permutation <-> pair of paths in Y^r");
  std::vector<std::string> word;
  std::string inverse_file;
  int colors = 1;
  colored->add_option("word", word, "colored permutation such as 3^0 1^1 2^0");
  colored->add_option("--r", colors, "number of colors")->capture_default_str();
  colored->add_option("--inverse", inverse_file, "path-pair JSON file to invert");
  colored->add_flag("--json", as_json);

  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram of a tower");
  tower_src.add_to(bratteli);
  std::string out_file;
  bratteli->add_option("--out", out_file, "write the graph JSON here");
  bratteli->add_flag("--json", as_json);

  auto* check_tower = app.add_subcommand("check-tower", "check Res Ind - Ind Res = rI and |G_n| = r^n n!");
  TowerSource check_src;
  check_src.add_to(check_tower);
  std::uint64_t tower_r = 1;
  check_tower->add_option("--r", tower_r, "duality parameter")->capture_default_str();
  check_tower->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify-rank2", "search towers {e} < C_r < G_2 over groups of order 2r^2");
  int class_r = 2;
  unsigned threads = 1;
  classify->add_option("--r", class_r, "r in {1, 2, 3, 5}")->required();
  classify->add_option("--parallel", threads, "worker threads")->capture_default_str();
  classify->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-wreath", "check the H wr S_n tower against (d_1 Y) x ... x (d_k Y)");
  std::string group_name;
  int max_level = 2;
  verify->add_option("--group", group_name, "base group H (catalog name)")->required();
  verify->add_option("--max-level", max_level, "top level")->capture_default_str();
  verify->add_flag("--json", as_json);

  auto* export_dot = app.add_subcommand("export-dot", "write DOT and a JSON twin of a graph or Bratteli diagram");
  GraphSource export_graph;
  TowerSource export_tower;
  export_graph.add_to(export_dot);
  export_tower.add_to(export_dot);
  std::string dot_out;
  export_dot->add_option("--out", dot_out, "DOT file; the JSON twin goes next to it with a .json extension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*check_dual) return run_check_dual(graph_src, r, first, last, as_json);
    if (*sum_sq) return run_sum_squares(sum_src, rank, sum_r, as_json);
    if (*rsk) return run_rsk(sigma, as_json);
    if (*colored) return run_colored_rsk(word, inverse_file, colors, as_json);
    if (*bratteli) return run_bratteli(tower_src, out_file, as_json);
    if (*check_tower) return run_check_tower(check_src, tower_r, as_json);
    if (*classify) return run_classify(class_r, threads, as_json);
    if (*verify) return run_verify_wreath(group_name, max_level, as_json);
    if (*export_dot) return run_export_dot(export_graph, export_tower, dot_out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
