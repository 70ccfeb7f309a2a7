#pragma once

// Robinson-Schensted by row insertion and by growth diagrams, and the
// colored version: r-colored permutations of n <-> pairs of saturated
// chains in Y^r with a common endpoint.

#include "dgg/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dgg {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

// Rows of strictly increasing entries; row lengths weakly decrease.
using Tableau = std::vector<std::vector<int>>;

struct TableauPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
};

struct ColoredPermutation {
  Permutation sigma;
  std::vector<int> colors;  // colors[i] in [0, r)
  int r = 1;

  int size() const { return static_cast<int>(sigma.size()); }
  // "3^0 1^1 2^0"
  std::string to_string() const;
  static ColoredPermutation parse(std::string_view text, int r);

  bool operator==(const ColoredPermutation&) const = default;
};

// Saturated chains from the bottom element; path[k] has total size k.
struct PathPair {
  std::vector<PartitionTuple> p_path;
  std::vector<PartitionTuple> q_path;

  bool operator==(const PathPair&) const = default;
  auto operator<=>(const PathPair&) const = default;
};

void validate_permutation(const Permutation& sigma);
Permutation parse_permutation(std::string_view text);

Partition tableau_shape(const Tableau& t);
// Shapes of the subtableaux holding entries <= k, k = 0..n, for a tableau
// with entries exactly 1..n.
std::vector<Partition> shape_chain(const Tableau& t);

TableauPair rsk_insert(const Permutation& sigma);
// Growth-diagram evaluation; returns shape chains with r = 1 tuples.
PathPair rsk_growth(const Permutation& sigma);

PathPair colored_rsk(const ColoredPermutation& w);
ColoredPermutation colored_rsk_inverse(const PathPair& pp, int r);

// Every r-colored permutation of n in lexicographic (sigma, colors) order.
std::vector<ColoredPermutation> all_colored_permutations(int n, int r);

}  // namespace dgg
