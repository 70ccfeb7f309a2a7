#include "dgg/tower.hpp"

#include "dgg/error.hpp"
#include "dgg/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace dgg {

Tower Tower::make(std::vector<FiniteGroup> levels, std::vector<Embedding> embeddings) {
  if (levels.empty()) fail(ErrorCode::InvalidArgument, "tower has no levels");
  if (levels[0].order() != 1) fail(ErrorCode::InvalidArgument, "level 0 of a tower must be the trivial group");
  if (embeddings.size() + 1 != levels.size()) {
    fail(ErrorCode::InvalidArgument, "tower with " + std::to_string(levels.size()) + " levels needs " +
                                         std::to_string(levels.size() - 1) + " embeddings");
  }
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    // Re-validate against the actual level groups.
    embeddings[i] = Embedding::make(levels[i], levels[i + 1], embeddings[i].map());
  }
  Tower t;
  t.levels_ = std::move(levels);
  t.embeddings_ = std::move(embeddings);
  return t;
}

Tower wreath_tower(const FiniteGroup& a, int max_level) {
  if (max_level < 0) fail(ErrorCode::InvalidArgument, "max level must be non-negative");
  std::vector<FiniteGroup> levels;
  std::vector<Embedding> embeddings;
  for (int n = 0; n <= max_level; ++n) {
    levels.push_back(wreath_symmetric(a, n));
    if (n > 0) embeddings.push_back(wreath_inclusion(a, n));
  }
  return Tower::make(std::move(levels), std::move(embeddings));
}

Tower symmetric_tower(int max_level) {
  Tower t = wreath_tower(trivial_group(), max_level);
  std::vector<FiniteGroup> levels;
  for (int n = 0; n <= max_level; ++n) levels.push_back(t.levels()[n].renamed("S" + std::to_string(n)));
  return Tower::make(std::move(levels), t.embeddings());
}

Tower subgroup_tower(const FiniteGroup& g, const Subgroup& h) {
  auto sub = as_group(g, h, "H");
  FiniteGroup e = trivial_group();
  Embedding e_to_h = Embedding::make(e, sub.group, {sub.group.identity()});
  return Tower::make({e, sub.group, g}, {e_to_h, sub.inclusion});
}

TowerCharacters tower_characters(const Tower& t) {
  TowerCharacters tc;
  const FiniteGroup& top = t.levels().back();
  // Every level embeds in the top one, so its exponent divides the top's.
  tc.prime = dixon_prime(top);
  for (const auto& g : t.levels()) tc.tables.push_back(character_table(g, tc.prime));
  for (std::size_t n = 0; n + 1 < t.levels().size(); ++n) {
    tc.restriction.push_back(restriction_matrix(t.embeddings()[n], tc.tables[n + 1], tc.tables[n]));
  }
  return tc;
}

GradedGraph build_bratteli(const TowerCharacters& tc) {
  auto label = [](std::size_t n, std::size_t k) { return std::to_string(n) + ":" + std::to_string(k); };
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t n = 0; n < tc.tables.size(); ++n) {
    for (std::size_t k = 0; k < tc.tables[n].irreducible_count(); ++k) vs.push_back({label(n, k), static_cast<int>(n)});
  }
  for (std::size_t n = 0; n < tc.restriction.size(); ++n) {
    const auto& m = tc.restriction[n];
    for (std::size_t psi = 0; psi < m.size(); ++psi) {
      for (std::size_t chi = 0; chi < m[psi].size(); ++chi) {
        if (m[psi][chi] > 0) es.push_back({label(n, psi), label(n + 1, chi), m[psi][chi]});
      }
    }
  }
  return GradedGraph::build(vs, es);
}

GradedGraph build_bratteli(const Tower& t) { return build_bratteli(tower_characters(t)); }

bool TowerReport::commutator_ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelVerdict& v) { return !v.checked || v.ok; });
}

bool TowerReport::orders_ok() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderVerdict& v) { return v.ok; });
}

TowerReport check_dual_tower(const Tower& t, std::uint64_t r) {
  if (t.top() < 1) fail(ErrorCode::InvalidArgument, "tower needs at least two levels");
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be positive");
  TowerReport report{r, {}, {}, build_bratteli(t)};

  // Res Ind at level n is U_n^T U_n and Ind Res is U_{n-1} U_{n-1}^T on the
  // Bratteli diagram, so the graph duality check evaluates the commutator.
  const auto duality = check_duality(report.bratteli, r, 0, t.top() - 1);
  for (int n = 0; n <= t.top(); ++n) {
    LevelVerdict v;
    v.level = n;
    v.checked = n < t.top();
    for (const auto& viol : duality.violations) {
      if (viol.rank == n) v.violations.push_back(viol);
    }
    v.ok = v.checked && v.violations.empty();
    report.levels.push_back(std::move(v));
  }

  BigInt expected = 1;
  for (int n = 0; n <= t.top(); ++n) {
    if (n > 0) expected *= BigInt(r) * n;
    const std::size_t order = t.levels()[n].order();
    report.orders.push_back({n, order, expected, BigInt(order) == expected});
  }
  return report;
}

namespace {

Rank2Candidate evaluate_candidate(const FiniteGroup& g, const GroupFingerprint& fp, const Subgroup& h, int r) {
  Rank2Candidate c{g.name(), fp, h, false, {}};
  const TowerReport report = check_dual_tower(subgroup_tower(g, h), static_cast<std::uint64_t>(r));
  if (!report.orders_ok()) {
    c.reason = "order condition fails";
  } else if (!report.commutator_ok()) {
    for (const auto& v : report.levels) {
      if (v.checked && !v.ok) {
        c.reason = "Res Ind - Ind Res != rI at level " + std::to_string(v.level);
        break;
      }
    }
  } else {
    c.passed = true;
  }
  return c;
}

}  // namespace

Rank2Classification classify_rank2(int r, unsigned threads) {
  const auto groups = catalog_order_2r2(r);
  Rank2Classification out;
  out.r = r;

  struct Job {
    std::size_t group;
    Subgroup subgroup;
  };
  std::vector<Job> jobs;
  std::vector<GroupFingerprint> fps;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    fps.push_back(fingerprint(groups[i]));
    for (auto& s : subgroups_of_order(groups[i], static_cast<std::size_t>(r))) jobs.push_back({i, std::move(s)});
  }

  out.candidates.resize(jobs.size());
  auto run = [&](std::size_t j) {
    out.candidates[j] = evaluate_candidate(groups[jobs[j].group], fps[jobs[j].group], jobs[j].subgroup, r);
  };
  if (threads <= 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run(j);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t j = w; j < jobs.size(); j += threads) run(j);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const auto wreath_fp = fingerprint(wreath_with_s2(cyclic(static_cast<std::size_t>(r))));
  const GradedGraph target = young_power(r, 2);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto& c = out.candidates[j];
    if (!c.passed) continue;
    auto it = std::find_if(out.survivors.begin(), out.survivors.end(),
                           [&](const Rank2Survivor& s) { return s.fingerprint == c.fingerprint; });
    if (it == out.survivors.end()) {
      const GradedGraph p = build_bratteli(subgroup_tower(groups[jobs[j].group], c.subgroup));
      out.survivors.push_back({c.group, c.fingerprint, {}, c.fingerprint == wreath_fp,
                               graphs_isomorphic(p, target).has_value()});
      it = std::prev(out.survivors.end());
    }
    it->subgroups.push_back(c.subgroup);
  }
  return out;
}

WreathReport verify_wreath_tower(const FiniteGroup& h, int max_level) {
  if (max_level < 1) fail(ErrorCode::InvalidArgument, "max level must be at least 1");
  BigInt top_order = 1;
  for (int n = 1; n <= max_level; ++n) top_order *= BigInt(h.order()) * n;
  if (top_order > kMaxCharacterOrder) {
    fail(ErrorCode::Unsupported, "top group order " + top_order.str() + " exceeds the engine bound " +
                                     std::to_string(kMaxCharacterOrder));
  }
  WreathReport report;
  report.r = h.order();
  report.dims = character_table(h).degrees;
  report.tower = check_dual_tower(wreath_tower(h, max_level), report.r);
  report.isomorphic = graphs_isomorphic(report.tower.bratteli, wreath_graph(report.dims, max_level)).has_value();
  return report;
}

}  // namespace dgg
