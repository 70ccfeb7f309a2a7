#include "dgg/graph.hpp"

#include "dgg/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace dgg {

namespace {

void require_rank(const GradedGraph& g, int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    fail(ErrorCode::OutOfRange, std::string(what) + ": rank " + std::to_string(n) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
  }
  (void)g;
}

}  // namespace

GradedGraph GradedGraph::build(const std::vector<VertexSpec>& vertices,
                               const std::vector<EdgeSpec>& edges) {
  int max_rank = -1;
  for (const auto& v : vertices) {
    if (v.rank < 0) fail(ErrorCode::InvalidArgument, "negative rank for vertex '" + v.label + "'");
    max_rank = std::max(max_rank, v.rank);
  }
  if (max_rank < 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");

  std::vector<std::vector<const VertexSpec*>> by_rank(max_rank + 1);
  for (const auto& v : vertices) by_rank[v.rank].push_back(&v);
  if (by_rank[0].size() != 1) {
    fail(ErrorCode::InvalidArgument,
         "expected exactly one rank-0 vertex, found " + std::to_string(by_rank[0].size()));
  }
  for (int n = 1; n <= max_rank; ++n) {
    if (by_rank[n].empty()) fail(ErrorCode::InvalidArgument, "rank " + std::to_string(n) + " is empty");
  }

  GradedGraph g;
  g.rank_start_.push_back(0);
  for (int n = 0; n <= max_rank; ++n) {
    for (const VertexSpec* v : by_rank[n]) {
      auto id = static_cast<VertexId>(g.labels_.size());
      if (!g.index_.emplace(v->label, id).second) {
        fail(ErrorCode::InvalidArgument, "duplicate vertex label '" + v->label + "'");
      }
      g.labels_.push_back(v->label);
      g.ranks_.push_back(n);
    }
    g.rank_start_.push_back(static_cast<VertexId>(g.labels_.size()));
  }

  std::map<std::pair<VertexId, VertexId>, std::uint64_t> mult;
  for (const auto& e : edges) {
    auto a = g.find(e.a);
    auto b = g.find(e.b);
    if (!a) fail(ErrorCode::InvalidArgument, "edge endpoint '" + e.a + "' is not a vertex");
    if (!b) fail(ErrorCode::InvalidArgument, "edge endpoint '" + e.b + "' is not a vertex");
    VertexId lo = *a, hi = *b;
    if (g.ranks_[lo] > g.ranks_[hi]) std::swap(lo, hi);
    if (g.ranks_[hi] != g.ranks_[lo] + 1) {
      fail(ErrorCode::InvalidArgument,
           "edge '" + e.a + "'-'" + e.b + "' does not join consecutive ranks");
    }
    if (e.m == 0) continue;
    mult[{lo, hi}] += e.m;
  }

  g.down_.resize(g.labels_.size());
  g.up_.resize(g.labels_.size());
  for (const auto& [key, m] : mult) {
    g.up_[key.first].push_back({key.second, m});
    g.down_[key.second].push_back({key.first, m});
  }
  for (auto& list : g.down_) {
    std::sort(list.begin(), list.end(), [](auto& l, auto& r) { return l.vertex < r.vertex; });
  }
  return g;
}

std::size_t GradedGraph::rank_size(int n) const {
  require_rank(*this, n, 0, max_rank(), "rank_size");
  return rank_start_[n + 1] - rank_start_[n];
}

VertexId GradedGraph::rank_begin(int n) const {
  require_rank(*this, n, 0, max_rank(), "rank_begin");
  return rank_start_[n];
}

VertexId GradedGraph::rank_end(int n) const {
  require_rank(*this, n, 0, max_rank(), "rank_end");
  return rank_start_[n + 1];
}

std::vector<VertexId> GradedGraph::rank_vertices(int n) const {
  std::vector<VertexId> out(rank_size(n));
  std::iota(out.begin(), out.end(), rank_start_[n]);
  return out;
}

std::optional<VertexId> GradedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId GradedGraph::at(std::string_view label) const {
  auto v = find(label);
  if (!v) fail(ErrorCode::InvalidArgument, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::uint64_t GradedGraph::multiplicity(VertexId a, VertexId b) const {
  if (ranks_[a] > ranks_[b]) std::swap(a, b);
  if (ranks_[b] != ranks_[a] + 1) return 0;
  for (const auto& nb : up_[a]) {
    if (nb.vertex == b) return nb.m;
  }
  return 0;
}

std::vector<Edge> GradedGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId v = 0; v < labels_.size(); ++v) {
    for (const auto& nb : up_[v]) out.push_back({v, nb.vertex, nb.m});
  }
  return out;
}

GradedGraph GradedGraph::truncate(int n) const {
  require_rank(*this, n, 0, max_rank(), "truncate");
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (VertexId v = 0; v < rank_start_[n + 1]; ++v) vs.push_back({labels_[v], ranks_[v]});
  for (const auto& e : edges()) {
    if (ranks_[e.upper] <= n) es.push_back({labels_[e.lower], labels_[e.upper], e.m});
  }
  return build(vs, es);
}

std::vector<VertexSpec> GradedGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) out.push_back({labels_[v], ranks_[v]});
  return out;
}

std::vector<EdgeSpec> GradedGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges()) out.push_back({labels_[e.lower], labels_[e.upper], e.m});
  return out;
}

bool GradedGraph::operator==(const GradedGraph& other) const {
  if (labels_ != other.labels_ || ranks_ != other.ranks_) return false;
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (up_[v].size() != other.up_[v].size()) return false;
    for (std::size_t i = 0; i < up_[v].size(); ++i) {
      if (up_[v][i].vertex != other.up_[v][i].vertex || up_[v][i].m != other.up_[v][i].m) return false;
    }
  }
  return true;
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

BigMatrix BigMatrix::operator*(const BigMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
  BigMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

BigMatrix BigMatrix::operator-(const BigMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    fail(ErrorCode::InvalidArgument, "matrix shape mismatch in difference");
  }
  BigMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

RankMatrix up_matrix(const GradedGraph& g, int n) {
  require_rank(g, n, 0, g.max_rank() - 1, "up_matrix");
  RankMatrix out{n, BigMatrix(g.rank_size(n + 1), g.rank_size(n))};
  for (VertexId x = g.rank_begin(n); x < g.rank_end(n); ++x) {
    for (const auto& nb : g.up(x)) out.entries(g.index_in_rank(nb.vertex), g.index_in_rank(x)) = nb.m;
  }
  return out;
}

RankMatrix down_matrix(const GradedGraph& g, int n) {
  require_rank(g, n, 1, g.max_rank(), "down_matrix");
  RankMatrix out{n, BigMatrix(g.rank_size(n - 1), g.rank_size(n))};
  for (VertexId y = g.rank_begin(n); y < g.rank_end(n); ++y) {
    for (const auto& nb : g.down(y)) out.entries(g.index_in_rank(nb.vertex), g.index_in_rank(y)) = nb.m;
  }
  return out;
}

DualityReport check_duality(const GradedGraph& g, std::uint64_t r, int first, int last) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "duality parameter r must be positive");
  if (first < 0 || last >= g.max_rank() || first > last) {
    fail(ErrorCode::OutOfRange, "duality window [" + std::to_string(first) + ", " +
                                    std::to_string(last) + "] invalid for max rank " +
                                    std::to_string(g.max_rank()));
  }
  DualityReport report;
  report.r = r;
  for (int n = first; n <= last; ++n) {
    report.checked_ranks.push_back(n);
    BigMatrix up = up_matrix(g, n).entries;
    BigMatrix commutator = up.transpose() * up;
    if (n > 0) {
      BigMatrix below = up_matrix(g, n - 1).entries;
      commutator = commutator - below * below.transpose();
    }
    const VertexId base = g.rank_begin(n);
    for (std::size_t i = 0; i < commutator.rows(); ++i) {
      for (std::size_t j = 0; j < commutator.cols(); ++j) {
        BigInt expected = (i == j) ? BigInt(r) : BigInt(0);
        if (commutator(i, j) != expected) {
          report.violations.push_back({n, static_cast<VertexId>(base + j),
                                       static_cast<VertexId>(base + i), commutator(i, j),
                                       expected});
        }
      }
    }
  }
  return report;
}

std::vector<BigInt> path_counts(const GradedGraph& g) {
  std::vector<BigInt> e(g.vertex_count());
  e[0] = 1;
  for (VertexId y = 1; y < g.vertex_count(); ++y) {
    for (const auto& nb : g.down(y)) e[y] += e[nb.vertex] * nb.m;
  }
  return e;
}

BigInt path_count(const GradedGraph& g, VertexId x) {
  if (x >= g.vertex_count()) fail(ErrorCode::InvalidArgument, "unknown vertex id");
  return path_counts(g)[x];
}

BigInt sum_of_squares(const GradedGraph& g, int n) {
  require_rank(g, n, 0, g.max_rank(), "sum_of_squares");
  auto e = path_counts(g);
  BigInt total = 0;
  for (VertexId x = g.rank_begin(n); x < g.rank_end(n); ++x) total += e[x] * e[x];
  return total;
}

std::vector<LemmaViolation> lemma_checks(const GradedGraph& g, int m) {
  require_rank(g, m, 0, g.max_rank() - 1, "lemma_checks");
  for (VertexId v = 0; v < g.rank_end(m); ++v) {
    for (const auto& nb : g.down(v)) {
      if (nb.m != 1) {
        fail(ErrorCode::InvalidArgument, "multiple edge '" + g.label(nb.vertex) + "'-'" +
                                             g.label(v) + "' below rank " + std::to_string(m));
      }
    }
  }

  std::vector<LemmaViolation> out;
  for (VertexId x = g.rank_begin(m); x < g.rank_end(m); ++x) {
    for (VertexId y = x + 1; y < g.rank_end(m); ++y) {
      std::vector<VertexId> common_covers;
      for (const auto& zx : g.up(x)) {
        if (g.multiplicity(y, zx.vertex) > 0) common_covers.push_back(zx.vertex);
      }
      if (common_covers.size() >= 2) {
        out.push_back({LemmaPart::CommonCovers, x, y,
                       "covered by both '" + g.label(common_covers[0]) + "' and '" +
                           g.label(common_covers[1]) + "'"});
      }
      if (common_covers.empty()) continue;

      std::optional<VertexId> co_cover;
      for (const auto& wx : g.down(x)) {
        if (g.multiplicity(wx.vertex, y) > 0) {
          co_cover = wx.vertex;
          break;
        }
      }
      if (!co_cover) {
        out.push_back({LemmaPart::CommonCoCover, x, y, "no common co-cover"});
        continue;
      }
      for (VertexId z : common_covers) {
        if (g.multiplicity(x, z) != 1 || g.multiplicity(y, z) != 1) {
          out.push_back({LemmaPart::CommonCoCover, x, y,
                         "common cover '" + g.label(z) + "' joined with multiplicity > 1"});
        }
      }
    }
  }
  return out;
}

namespace {

struct IsoSearch {
  const GradedGraph& p;
  const GradedGraph& q;
  std::vector<std::size_t> p_class;
  std::vector<std::size_t> q_class;
  std::vector<VertexId> order;  // P vertices in search order
  std::vector<VertexId> map;
  std::vector<bool> used;

  static constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

  bool consistent(VertexId x, VertexId y) const {
    if (p_class[x] != q_class[y] || used[y]) return false;
    // Down-edges of x all land in already-mapped vertices (rank order).
    if (p.down(x).size() != q.down(y).size()) return false;
    for (const auto& nb : p.down(x)) {
      if (q.multiplicity(map[nb.vertex], y) != nb.m) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    VertexId x = order[k];
    int n = p.rank(x);
    // A vertex with the same label is tried first, so equal graphs map identically.
    auto same = q.find(p.label(x));
    if (same && q.rank(*same) == n && try_map(x, *same, k)) return true;
    for (VertexId y = q.rank_begin(n); y < q.rank_end(n); ++y) {
      if (same && y == *same) continue;
      if (try_map(x, y, k)) return true;
    }
    return false;
  }

  bool try_map(VertexId x, VertexId y, std::size_t k) {
    if (!consistent(x, y)) return false;
    map[x] = y;
    used[y] = true;
    if (extend(k + 1)) return true;
    used[y] = false;
    map[x] = kUnmapped;
    return false;
  }
};

// Invariant used to refine candidates: rank, multiset of downward
// multiplicities, and path count.
using VertexInvariant = std::tuple<int, std::vector<std::uint64_t>, BigInt>;

std::vector<VertexInvariant> invariants(const GradedGraph& g) {
  auto e = path_counts(g);
  std::vector<VertexInvariant> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::uint64_t> ms;
    for (const auto& nb : g.down(v)) ms.push_back(nb.m);
    std::sort(ms.begin(), ms.end());
    out.emplace_back(g.rank(v), std::move(ms), e[v]);
  }
  return out;
}

}  // namespace

std::optional<std::vector<VertexId>> graphs_isomorphic(const GradedGraph& p,
                                                       const GradedGraph& q) {
  if (p.max_rank() != q.max_rank()) return std::nullopt;
  for (int n = 0; n <= p.max_rank(); ++n) {
    if (p.rank_size(n) != q.rank_size(n)) return std::nullopt;
  }
  if (p.edges().size() != q.edges().size()) return std::nullopt;

  auto pi = invariants(p);
  auto qi = invariants(q);
  std::map<VertexInvariant, std::size_t> classes;
  for (const auto& inv : pi) classes.emplace(inv, classes.size());
  IsoSearch s{p, q, {}, {}, {}, std::vector<VertexId>(p.vertex_count(), IsoSearch::kUnmapped),
              std::vector<bool>(q.vertex_count(), false)};
  for (const auto& inv : pi) s.p_class.push_back(classes.at(inv));
  for (const auto& inv : qi) {
    auto it = classes.find(inv);
    s.q_class.push_back(it == classes.end() ? static_cast<std::size_t>(-1) : it->second);
  }
  {
    auto count = [](const std::vector<std::size_t>& cls) {
      std::map<std::size_t, std::size_t> h;
      for (auto c : cls) ++h[c];
      return h;
    };
    if (count(s.p_class) != count(s.q_class)) return std::nullopt;
  }

  // Rank by rank, labels lexicographically within a rank.
  for (int n = 0; n <= p.max_rank(); ++n) {
    auto vs = p.rank_vertices(n);
    std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return p.label(a) < p.label(b); });
    s.order.insert(s.order.end(), vs.begin(), vs.end());
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

bool validate_isomorphism(const GradedGraph& p, const GradedGraph& q,
                          std::span<const VertexId> map) {
  if (map.size() != p.vertex_count() || p.vertex_count() != q.vertex_count()) return false;
  std::vector<bool> hit(q.vertex_count(), false);
  for (VertexId x = 0; x < map.size(); ++x) {
    if (map[x] >= q.vertex_count() || hit[map[x]] || p.rank(x) != q.rank(map[x])) return false;
    hit[map[x]] = true;
  }
  auto pe = p.edges();
  if (pe.size() != q.edges().size()) return false;
  for (const auto& e : pe) {
    if (q.multiplicity(map[e.lower], map[e.upper]) != e.m) return false;
  }
  return true;
}

}  // namespace dgg
