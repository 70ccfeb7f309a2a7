#pragma once

// Towers of finite groups {e} = G_0 < G_1 < ..., their Bratteli diagrams,
// the r-dual tower test, and the rank-2 classification search.

#include "dgg/character.hpp"
#include "dgg/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dgg {

class Tower {
 public:
  // Level 0 must be trivial; embeddings[i] maps level i into level i+1.
  static Tower make(std::vector<FiniteGroup> levels, std::vector<Embedding> embeddings);

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<FiniteGroup>& levels() const { return levels_; }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<Embedding> embeddings_;
};

// {e} < A < A wr S_2 < ... < A wr S_max_level.
Tower wreath_tower(const FiniteGroup& a, int max_level);
Tower symmetric_tower(int max_level);
// {e} < H < G for a subgroup H of G.
Tower subgroup_tower(const FiniteGroup& g, const Subgroup& h);

// Character tables of every level (one shared prime) and the restriction
// matrices between consecutive levels.
struct TowerCharacters {
  std::uint64_t prime = 0;
  std::vector<CharacterTable> tables;
  // restriction[n][psi][chi] = <Res chi, psi> for psi in Irr(G_n), chi in Irr(G_{n+1}).
  std::vector<std::vector<std::vector<std::uint64_t>>> restriction;
};

TowerCharacters tower_characters(const Tower& t);

// Rank-n vertices "n:k" for the k-th irreducible of G_n; edge
// multiplicities are restriction multiplicities.
GradedGraph build_bratteli(const TowerCharacters& tc);
GradedGraph build_bratteli(const Tower& t);

struct LevelVerdict {
  int level = 0;
  bool checked = false;  // false only for the top level
  bool ok = false;
  std::vector<DualityViolation> violations;
};

struct OrderVerdict {
  int level = 0;
  std::size_t order = 0;
  BigInt expected;  // r^n n!
  bool ok = false;
};

struct TowerReport {
  std::uint64_t r = 0;
  std::vector<LevelVerdict> levels;
  std::vector<OrderVerdict> orders;
  GradedGraph bratteli;

  bool commutator_ok() const;
  bool orders_ok() const;
  bool passed() const { return commutator_ok() && orders_ok(); }
};

// Res Ind - Ind Res = rI on every level below the top, plus |G_n| = r^n n!.
TowerReport check_dual_tower(const Tower& t, std::uint64_t r);

struct Rank2Candidate {
  std::string group;
  GroupFingerprint fingerprint;
  Subgroup subgroup;  // G_1 inside G_2 (conjugacy-class representative)
  bool passed = false;
  std::string reason;  // first failed condition when !passed
};

struct Rank2Survivor {
  std::string group;
  GroupFingerprint fingerprint;
  std::vector<Subgroup> subgroups;
  bool is_wreath = false;          // fingerprint of C_r wr S_2
  bool young_power_match = false;  // P_[0,2] isomorphic to (Y^r)_[0,2]
};

struct Rank2Classification {
  int r = 0;
  std::vector<Rank2Candidate> candidates;  // catalog order x subgroup order
  std::vector<Rank2Survivor> survivors;    // grouped by fingerprint
};

// Every group of order 2r^2 and every class of order-r subgroups, tested as
// {e} < C_r < G_2. `threads` > 1 evaluates candidates concurrently; output
// order does not depend on it.
Rank2Classification classify_rank2(int r, unsigned threads = 1);

struct WreathReport {
  std::uint64_t r = 0;
  std::vector<std::uint64_t> dims;  // irreducible degrees of H
  TowerReport tower;
  bool isomorphic = false;  // Bratteli diagram ~ wreath_graph(dims)

  bool passed() const { return tower.passed() && isomorphic; }
};

WreathReport verify_wreath_tower(const FiniteGroup& h, int max_level);

}  // namespace dgg
