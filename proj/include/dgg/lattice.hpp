#pragma once

// Integer partitions, tuples of partitions, and the graded graphs built
// from them: Young's lattice, products, multiplicity scalings and the
// iterated products that model wreath-product branching.

#include "dgg/graph.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dgg {

class Partition {
 public:
  Partition() = default;
  // Throws unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int row(int i) const { return i < length() ? parts_[i] : 0; }

  // Rows where a box can be added / removed, in increasing row order.
  std::vector<int> addable_rows() const;
  std::vector<int> removable_rows() const;
  Partition add_box(int row) const;
  Partition remove_box(int row) const;

  // "3,1" for (3,1); "-" for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

class PartitionTuple {
 public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> components);
  static PartitionTuple empty(int r) { return PartitionTuple(std::vector<Partition>(r)); }

  int r() const { return static_cast<int>(components_.size()); }
  int total_size() const { return total_size_; }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](int k) const { return components_[k]; }
  PartitionTuple add_box(int component, int row) const;

  // Semicolon-joined partitions, "-" for empty: "2,1;-;1".
  std::string to_string() const;
  static PartitionTuple parse(std::string_view text);

  auto operator<=>(const PartitionTuple&) const = default;

 private:
  std::vector<Partition> components_;
  int total_size_ = 0;
};

// All r-tuples of partitions with total size n.
std::vector<PartitionTuple> partition_tuples_of(int n, int r);

GradedGraph young_lattice(int max_rank);

// Vertices (x, y) with rank rho(x) + rho(y); one coordinate moves along a
// cover and the edge inherits its multiplicity. Truncated at the smaller
// of the two max ranks. Labels are "<x>;<y>".
GradedGraph product(const GradedGraph& p, const GradedGraph& q);

GradedGraph scale(const GradedGraph& p, std::uint64_t d);

// (d_1 Y) x (d_2 Y) x ... x (d_k Y) through `max_rank`; labels follow the
// partition-tuple grammar, so dims of all ones give Y^k.
GradedGraph wreath_graph(const std::vector<std::uint64_t>& dims, int max_rank);
GradedGraph young_power(int r, int max_rank);

// Multinomial(n; |l^1|, ..., |l^r|) * prod f_{l^i}.
BigInt wreath_dim(const PartitionTuple& lambda);

// Number of standard Young tableaux of the given shape, by path counting in Y.
BigInt syt_count(const Partition& lambda);

}  // namespace dgg
