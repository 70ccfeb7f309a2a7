#include "dgg/character.hpp"
#include "dgg/error.hpp"
#include "dgg/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dgg;

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g).classes) s.push_back(c.size());
  return s;
}

std::size_t count_order(const FiniteGroup& g, std::uint64_t k) {
  std::size_t n = 0;
  for (Elem x = 0; x < g.order(); ++x) n += g.element_order(x) == k;
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("construction from tables and generators") {
  auto c2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);

  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  auto w = FiniteGroup::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}, {2, 3, 0, 1}});
  CHECK(w.order() == 8);
  CHECK(fingerprint(w) == fingerprint(dihedral(4)));

  CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 2}, {2, 0}}), Error);
  // closed with identity and inverses but not associative
  CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}}),
                  Error);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}, "S8", 100), Error);
}

TEST_CASE("named constructors") {
  CHECK(trivial_group().order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(cyclic(7).is_abelian());
  CHECK(dihedral(5).order() == 10);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(0).order() == 1);

  auto q8 = quaternion8();
  CHECK(q8.order() == 8);
  CHECK(count_order(q8, 2) == 1);

  auto w2 = wreath_symmetric(cyclic(2), 2);
  CHECK(w2.order() == 8);
  CHECK(fingerprint(w2) == fingerprint(dihedral(4)));

  auto w3 = wreath_symmetric(cyclic(3), 2);
  CHECK(w3.order() == 18);
  CHECK(commutator_subgroup(w3).size() == 3);
  CHECK(commutator_subgroup(generalized_dihedral(direct_product(cyclic(3), cyclic(3)))).size() == 9);
  CHECK(commutator_subgroup(dihedral(9)).size() == 9);

  CHECK(wreath_symmetric(cyclic(2), 3).order() == 48);
  CHECK(wreath_symmetric(symmetric(3), 2).order() == 72);
  CHECK(fingerprint(wreath_with_s2(cyclic(3))) == fingerprint(w3));
  CHECK_THROWS_AS(generalized_dihedral(symmetric(3)), Error);
}

TEST_CASE("wreath inclusion is a homomorphism into the next level") {
  for (int n = 1; n <= 3; ++n) {
    auto e = wreath_inclusion(cyclic(2), n);
    CHECK(e.source_order() == wreath_symmetric(cyclic(2), n - 1).order());
    CHECK(e.target_order() == wreath_symmetric(cyclic(2), n).order());
  }
}

TEST_CASE("names") {
  CHECK(group_by_name("C4xC2").order() == 8);
  CHECK(group_by_name("C2^3").order() == 8);
  CHECK(group_by_name("D4").order() == 8);
  CHECK(group_by_name("Q8").order() == 8);
  CHECK(group_by_name("S3").order() == 6);
  CHECK(group_by_name("C3wrS2").order() == 18);
  CHECK(group_by_name("GenDih(C3xC3)").order() == 18);
  CHECK(group_by_name("(C2xC2)wrS2").order() == 32);
  CHECK(group_by_name("1").order() == 1);
  CHECK(group_by_name("trivial").order() == 1);
  CHECK_THROWS_AS(group_by_name("Z9"), Error);
  CHECK_THROWS_AS(group_by_name("C"), Error);
  CHECK_THROWS_AS(group_by_name("C3x"), Error);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic(6)).size() == 6);
  auto s3 = class_sizes(symmetric(3));
  std::sort(s3.begin(), s3.end());
  CHECK(s3 == std::vector<std::size_t>{1, 2, 3});
  CHECK(class_sizes(quaternion8()).size() == 5);
  auto cc = conjugacy_classes(symmetric(4));
  CHECK(cc.size() == 5);
  CHECK(cc.classes[0] == std::vector<Elem>{0});
}

TEST_CASE("subgroups") {
  auto d4 = dihedral(4);
  CHECK(subgroups_of_order(d4, 2).size() == 3);
  CHECK(subgroups_of_order(quaternion8(), 2).size() == 1);
  CHECK(subgroups_of_order(d4, 1) == std::vector<Subgroup>{{0}});
  CHECK_THROWS_AS(subgroups_of_order(d4, 3), Error);

  // D4 has 10 subgroups, S4 has 30
  CHECK(all_subgroups(d4, 8).size() == 10);
  CHECK(all_subgroups(symmetric(4), 24).size() == 30);

  auto s4 = symmetric(4);
  std::size_t normal = 0;
  for (const auto& h : all_subgroups(s4, 24)) normal += is_normal(s4, h);
  CHECK(normal == 4);

  for (const auto& h : subgroups_of_order(d4, 2)) {
    CHECK(is_subgroup(d4, h));
    const bool central = is_normal(d4, h);
    CHECK(normalizer(d4, h).size() == (central ? 8u : 4u));
  }
}

TEST_CASE("catalog of groups of order 2r^2") {
  auto c1 = catalog_order_2r2(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].order() == 2);

  for (int r : {2, 3, 5}) {
    auto cat = catalog_order_2r2(r);
    CHECK(cat.size() == 5);
    std::set<GroupFingerprint> fps;
    for (const auto& g : cat) {
      CHECK(g.order() == static_cast<std::size_t>(2 * r * r));
      fps.insert(fingerprint(g));
    }
    CHECK(fps.size() == cat.size());
  }
  std::set<std::string> names;
  for (const auto& g : catalog_order_2r2(2)) names.insert(g.name());
  CHECK(names == std::set<std::string>{"C8", "C4xC2", "C2xC2xC2", "D4", "Q8"});
  CHECK_THROWS_AS(catalog_order_2r2(4), Error);
}

TEST_CASE("embeddings are checked") {
  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  CHECK_NOTHROW(Embedding::make(c2, c4, {0, 2}));
  CHECK_THROWS_AS(Embedding::make(c2, c4, {0, 1}), Error);
  CHECK_THROWS_AS(Embedding::make(c2, c4, {0, 0}), Error);
  CHECK_THROWS_AS(Embedding::make(c2, c4, {0}), Error);
}

TEST_SUITE_END();
