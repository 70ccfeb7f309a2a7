#include "dgg/character.hpp"
#include "dgg/error.hpp"
#include "dgg/lattice.hpp"
#include "dgg/tower.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dgg;

namespace {

std::vector<FiniteGroup> corpus() {
  std::vector<FiniteGroup> out;
  for (int r : {1, 2, 3, 5}) {
    for (auto& g : catalog_order_2r2(r)) out.push_back(g);
  }
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(wreath_symmetric(cyclic(2), 3));
  out.push_back(wreath_symmetric(cyclic(3), 2));
  out.push_back(wreath_symmetric(symmetric(3), 2));
  out.push_back(cyclic(12));
  out.push_back(dihedral(6));
  out.push_back(direct_product(symmetric(3), cyclic(2)));
  return out;
}

Subgroup involution_subgroup(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) return generated_subgroup(g, {x});
  }
  return {};
}

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

void check_orthogonality(const CharacterTable& t) {
  const PrimeField f = t.field();
  const std::size_t k = t.class_count();
  REQUIRE(t.irreducible_count() == k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) CHECK(t.inner_product(t.values[a], t.values[b]) == (a == b ? 1u : 0u));
  }
  const auto info = t.class_info();
  const std::uint64_t order = t.group.order() % f.p;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      std::uint64_t s = 0;
      for (std::size_t chi = 0; chi < k; ++chi) s = f.add(s, f.mul(t.values[chi][c], t.values[chi][t.inverse_class[d]]));
      const std::uint64_t expected = c == d ? f.mul(order, f.inv(info[c].size % f.p)) : 0;
      CHECK(s == expected);
    }
  }
}

// Restriction/induction pairs used for the reciprocity checks.
std::vector<std::pair<FiniteGroup, Subgroup>> embedding_corpus() {
  std::vector<std::pair<FiniteGroup, Subgroup>> out;
  for (auto g : {symmetric(3), symmetric(4), dihedral(4), quaternion8(), wreath_symmetric(cyclic(3), 2), dihedral(6)}) {
    for (const auto& h : all_subgroups(g, g.order())) out.emplace_back(g, h);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("character");

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(dixon_prime(6, 6) == 13);
  CHECK(dixon_prime(1, 1) == 3);
  const auto p = dixon_prime(symmetric(4));
  CHECK((p - 1) % 12 == 0);
  CHECK(p > 48);
  CHECK_THROWS_AS(character_table(symmetric(3), 11), Error);
  CHECK_NOTHROW(character_table(symmetric(3), 19));
  CHECK_NOTHROW(character_table(trivial_group(), 5));
}

TEST_CASE("character table examples") {
  auto c3 = character_table(cyclic(3));
  CHECK(c3.degrees == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(sorted_degrees(character_table(symmetric(3))) == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(sorted_degrees(character_table(dihedral(4))) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  auto s4 = character_table(symmetric(4));
  CHECK(sorted_degrees(s4) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  for (std::size_t c = 0; c < s4.class_count(); ++c) CHECK(s4.values[0][c] == 1);
}

TEST_CASE("orthogonality and sum of squared degrees on the corpus") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name());
    auto t = character_table(g);
    check_orthogonality(t);
    std::uint64_t s = 0;
    for (auto d : t.degrees) s += d * d;
    CHECK(s == g.order());
  }
}

TEST_CASE("degrees agree with the regular-representation oracle") {
  for (const auto& g : corpus()) {
    if (g.order() > 24) continue;
    CAPTURE(g.name());
    CHECK(sorted_degrees(character_table(g)) == oracle::regular_character_degrees(g));
  }
  for (const auto& g : {symmetric(4), group_by_name("C2xC2xS3"), direct_product(quaternion8(), cyclic(3))}) {
    CAPTURE(g.name());
    CHECK(sorted_degrees(character_table(g)) == oracle::regular_character_degrees(g));
  }
}

TEST_CASE("wreath degree multisets") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::uint64_t> expected;
      for (const auto& t : partition_tuples_of(n, r)) expected.push_back(static_cast<std::uint64_t>(wreath_dim(t)));
      std::sort(expected.begin(), expected.end());
      CHECK(sorted_degrees(character_table(wreath_symmetric(cyclic(r), n))) == expected);
    }
  }
}

TEST_CASE("restriction examples") {
  auto s3 = symmetric(3);
  auto t3 = character_table(s3);
  Subgroup s2 = involution_subgroup(s3);
  REQUIRE(s2.size() == 2);
  auto sub = as_group(s3, s2);
  auto t2 = character_table(sub.group, t3.prime);
  auto res = restriction_matrix(sub.inclusion, t3, t2);
  const std::size_t two = std::find(t3.degrees.begin(), t3.degrees.end(), 2u) - t3.degrees.begin();
  CHECK(res[0][two] == 1);
  CHECK(res[1][two] == 1);

  auto id = Embedding::make(s3, s3, {0, 1, 2, 3, 4, 5});
  auto same = restriction_matrix(id, t3, t3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(same[a][b] == (a == b ? 1u : 0u));
  }

  auto d4 = dihedral(4);
  auto td = character_table(d4);
  const std::size_t d2 = std::find(td.degrees.begin(), td.degrees.end(), 2u) - td.degrees.begin();
  for (const auto& h : subgroups_of_order(d4, 2)) {
    if (is_normal(d4, h)) continue;
    auto hg = as_group(d4, h);
    auto r = restriction_matrix(hg.inclusion, td, character_table(hg.group));
    CHECK(r[0][d2] == 1);
    CHECK(r[1][d2] == 1);
  }
}

TEST_CASE("restriction recomputes tables when primes differ") {
  auto s3 = symmetric(3);
  auto big = character_table(s3, 13);
  auto sub = as_group(s3, involution_subgroup(s3));
  auto small = character_table(sub.group, 7);
  auto res = restriction_matrix(sub.inclusion, big, small);
  CHECK(res.size() == 2);
}

TEST_CASE("Frobenius reciprocity and dimension of induced trivial") {
  for (const auto& [g, h] : embedding_corpus()) {
    auto tg = character_table(g);
    auto sub = as_group(g, h);
    auto th = character_table(sub.group, tg.prime);
    auto res = restriction_matrix(sub.inclusion, tg, th);
    auto ind = induction_matrix(sub.inclusion, tg, th);
    REQUIRE(ind.size() == tg.irreducible_count());
    for (std::size_t chi = 0; chi < tg.irreducible_count(); ++chi) {
      for (std::size_t psi = 0; psi < th.irreducible_count(); ++psi) CHECK(ind[chi][psi] == res[psi][chi]);
    }
    std::uint64_t dim = 0;
    for (std::size_t chi = 0; chi < tg.irreducible_count(); ++chi) dim += ind[chi][0] * tg.degrees[chi];
    CHECK(dim == g.order() / h.size());
  }
}

TEST_CASE("Clifford examples") {
  auto s3 = symmetric(3);
  auto t3 = character_table(s3);
  auto a3 = subgroups_of_order(s3, 3).at(0);
  auto ta3 = character_table(as_group(s3, a3).group, t3.prime);
  const std::size_t two = std::find(t3.degrees.begin(), t3.degrees.end(), 2u) - t3.degrees.begin();
  auto v = clifford_check(t3, a3, ta3, two);
  CHECK(v.passed());
  CHECK(v.constituents.size() == 2);
  CHECK(std::find(v.constituents.begin(), v.constituents.end(), 0u) == v.constituents.end());
  CHECK(v.orbit.size() == 2);

  auto d4 = dihedral(4);
  auto td = character_table(d4);
  Subgroup c4;
  for (const auto& h : all_subgroups(d4, 4)) {
    if (h.size() == 4 && as_group(d4, h).group.exponent() == 4) c4 = h;
  }
  REQUIRE(c4.size() == 4);
  auto tc4 = character_table(as_group(d4, c4).group, td.prime);
  const std::size_t d2 = std::find(td.degrees.begin(), td.degrees.end(), 2u) - td.degrees.begin();
  auto w = clifford_check(td, c4, tc4, d2);
  CHECK(w.passed());
  CHECK(w.constituents.size() == 2);
  for (auto c : w.constituents) {
    // faithful characters of C4 take a value of order 4 on a generator
    const auto& hg = tc4.group;
    Elem gen = 0;
    for (Elem x = 0; x < hg.order(); ++x) {
      if (hg.element_order(x) == 4) gen = x;
    }
    const auto val = tc4.value(c, gen);
    const PrimeField f = tc4.field();
    CHECK(f.pow(val, 2) != 1);
    CHECK(f.pow(val, 4) == 1);
  }
}

TEST_CASE("Clifford holds for every normal subgroup of the small corpus groups") {
  for (const auto& g : corpus()) {
    if (g.order() > 24) continue;
    CAPTURE(g.name());
    auto tg = character_table(g);
    for (const auto& n : all_subgroups(g, g.order())) {
      if (!is_normal(g, n)) continue;
      auto tn = character_table(as_group(g, n).group, tg.prime);
      for (std::size_t chi = 0; chi < tg.irreducible_count(); ++chi) CHECK(clifford_check(tg, n, tn, chi).passed());
    }
  }
}

TEST_CASE("Clifford conclusion fails over a non-normal subgroup") {
  auto d4 = dihedral(4);
  auto td = character_table(d4);
  const std::size_t d2 = std::find(td.degrees.begin(), td.degrees.end(), 2u) - td.degrees.begin();
  bool seen = false;
  for (const auto& h : subgroups_of_order(d4, 2)) {
    if (is_normal(d4, h)) continue;
    auto th = character_table(as_group(d4, h).group, td.prime);
    CHECK_THROWS_AS(clifford_check(td, h, th, d2), Error);
    auto v = clifford_analysis(td, h, th, d2);
    CHECK_FALSE(v.single_orbit);
    CHECK_FALSE(v.passed());
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("fingerprints separate and identify") {
  CHECK(fingerprint(dihedral(4)) != fingerprint(quaternion8()));
  CHECK(fingerprint(character_table(dihedral(4))) == fingerprint(dihedral(4)));
  CHECK(fingerprint(wreath_symmetric(cyclic(2), 2)) == fingerprint(dihedral(4)));
}

TEST_SUITE_END();
