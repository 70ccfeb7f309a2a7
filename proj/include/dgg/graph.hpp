#pragma once

// Ranked multigraphs with non-negative integer edge multiplicities, the
// up/down operators between consecutive ranks, and the checks built on
// them (duality, path counting, cover-structure facts, isomorphism).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dgg {

using BigInt = boost::multiprecision::cpp_int;
using VertexId = std::uint32_t;

struct VertexSpec {
  std::string label;
  int rank = 0;
};

struct EdgeSpec {
  std::string a;
  std::string b;
  std::uint64_t m = 1;
};

// One stored edge; `lower` sits one rank below `upper`.
struct Edge {
  VertexId lower;
  VertexId upper;
  std::uint64_t m;
};

struct Neighbor {
  VertexId vertex;
  std::uint64_t m;
};

// Immutable graded graph. Vertex ids are assigned rank by rank, in the
// order vertices were given within each rank, so id 0 is always the
// bottom element.
class GradedGraph {
 public:
  // Validates and builds. Throws dgg::Error on duplicate labels, edges
  // between non-consecutive ranks, a missing or repeated rank-0 vertex, an
  // empty intermediate rank, or an unknown edge endpoint. Zero-multiplicity
  // edges are dropped; repeated pairs accumulate.
  static GradedGraph build(const std::vector<VertexSpec>& vertices,
                           const std::vector<EdgeSpec>& edges);

  int max_rank() const { return static_cast<int>(rank_start_.size()) - 2; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t rank_size(int n) const;

  // Ids of rank n form the contiguous range [rank_begin(n), rank_end(n)).
  VertexId rank_begin(int n) const;
  VertexId rank_end(int n) const;
  std::vector<VertexId> rank_vertices(int n) const;

  int rank(VertexId v) const { return ranks_[v]; }
  // Position of v within its rank.
  std::size_t index_in_rank(VertexId v) const { return v - rank_start_[ranks_[v]]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId at(std::string_view label) const;  // throws on unknown label

  std::span<const Neighbor> down(VertexId v) const { return down_[v]; }
  std::span<const Neighbor> up(VertexId v) const { return up_[v]; }
  std::uint64_t multiplicity(VertexId a, VertexId b) const;
  std::vector<Edge> edges() const;

  // Restriction to ranks [0, n].
  GradedGraph truncate(int n) const;

  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

  bool operator==(const GradedGraph& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<VertexId> rank_start_;  // size max_rank + 2
  std::vector<std::vector<Neighbor>> down_;
  std::vector<std::vector<Neighbor>> up_;
  std::unordered_map<std::string, VertexId> index_;
};

// Dense matrix of arbitrary-precision integers, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BigMatrix transpose() const;
  BigMatrix operator*(const BigMatrix& rhs) const;
  BigMatrix operator-(const BigMatrix& rhs) const;
  bool operator==(const BigMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// U restricted to rank n: entry (y, x) = m(x, y), rows indexed by rank n+1,
// columns by rank n (positions within the rank).
struct RankMatrix {
  int source_rank = 0;
  BigMatrix entries;
};

struct DualityViolation {
  int rank;
  VertexId x;
  VertexId y;
  BigInt lhs;  // (DU - UD)(x, y)
  BigInt rhs;  // r * delta(x, y)
};

struct DualityReport {
  std::uint64_t r = 0;
  std::vector<int> checked_ranks;
  std::vector<DualityViolation> violations;

  bool ok() const { return violations.empty(); }
};

enum class LemmaPart { CommonCovers, CommonCoCover };

struct LemmaViolation {
  LemmaPart part;
  VertexId x;
  VertexId y;
  std::string detail;
};

RankMatrix up_matrix(const GradedGraph& g, int n);
RankMatrix down_matrix(const GradedGraph& g, int n);  // D from rank n to n-1

// Checks DU - UD = rI at every rank in [first, last]. Requires last < max_rank.
DualityReport check_duality(const GradedGraph& g, std::uint64_t r, int first, int last);

// e(x) for every vertex, indexed by VertexId.
std::vector<BigInt> path_counts(const GradedGraph& g);
BigInt path_count(const GradedGraph& g, VertexId x);
BigInt sum_of_squares(const GradedGraph& g, int n);

// Cover-structure facts that every r-dual graph without multiple edges in
// ranks [0, m] satisfies at rank m. Throws if a multiple edge lies in [0, m].
std::vector<LemmaViolation> lemma_checks(const GradedGraph& g, int m);

// Rank- and multiplicity-preserving bijection P -> Q (indexed by P's ids),
// or nullopt. Deterministic.
std::optional<std::vector<VertexId>> graphs_isomorphic(const GradedGraph& p,
                                                       const GradedGraph& q);

// True if `map` is a rank- and multiplicity-preserving bijection.
bool validate_isomorphism(const GradedGraph& p, const GradedGraph& q,
                          std::span<const VertexId> map);

}  // namespace dgg
