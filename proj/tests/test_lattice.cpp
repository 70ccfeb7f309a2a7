#include "dgg/error.hpp"
#include "dgg/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dgg;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("partition basics") {
  Partition p({3, 1});
  CHECK(p.size() == 4);
  CHECK(p.to_string() == "3,1");
  CHECK(Partition::parse("3,1") == p);
  CHECK(Partition::parse("-") == Partition());
  CHECK(Partition().to_string() == "-");
  CHECK(p.addable_rows() == std::vector<int>{0, 1, 2});
  CHECK(p.removable_rows() == std::vector<int>{0, 1});
  CHECK(p.add_box(1) == Partition({3, 2}));
  CHECK(p.remove_box(1) == Partition({3}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(Partition::parse("2,x"), Error);
  CHECK_THROWS_AS(p.add_box(3), Error);
}

TEST_CASE("partition counts") {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < static_cast<int>(p.size()); ++n) CHECK(partitions_of(n).size() == p[n]);
  CHECK(partitions_of(3).front() == Partition({3}));
}

TEST_CASE("partition tuples") {
  auto t = PartitionTuple::parse("2,1;-;1");
  CHECK(t.r() == 3);
  CHECK(t.total_size() == 4);
  CHECK(t.to_string() == "2,1;-;1");
  CHECK(t.add_box(1, 0).to_string() == "2,1;1;1");
  // r-colored multipartitions of n: 2 -> 5, r=2 n=3 -> 10
  CHECK(partition_tuples_of(2, 2).size() == 5);
  CHECK(partition_tuples_of(3, 2).size() == 10);
  CHECK(partition_tuples_of(0, 3).size() == 1);
}

TEST_CASE("young lattice") {
  auto y2 = young_lattice(2);
  CHECK(y2.vertex_count() == 4);
  CHECK(y2.find("-"));
  CHECK(y2.find("1"));
  CHECK(y2.find("2"));
  CHECK(y2.find("1,1"));

  auto y4 = young_lattice(4);
  const std::vector<std::size_t> sizes = {1, 1, 2, 3, 5};
  for (int n = 0; n <= 4; ++n) CHECK(y4.rank_size(n) == sizes[n]);
  CHECK(check_duality(y4, 1, 0, 3).ok());
}

TEST_CASE("products") {
  auto y = young_lattice(3);
  auto yy = product(y, y);
  REQUIRE(yy.rank_size(1) == 2);
  CHECK(yy.find("1;-"));
  CHECK(yy.find("-;1"));
  CHECK(check_duality(yy, 2, 0, 2).ok());
  CHECK(check_duality(product(scale(young_lattice(4), 2), young_lattice(4)), 5, 0, 3).ok());
  CHECK(product(young_lattice(5), young_lattice(3)).max_rank() == 3);
}

TEST_CASE("product is associative up to isomorphism") {
  const std::vector<GradedGraph> pieces = {young_lattice(4), scale(young_lattice(4), 2), young_power(2, 4)};
  for (const auto& a : pieces) {
    for (const auto& b : pieces) {
      for (const auto& c : pieces) {
        auto left = product(product(a, b), c);
        auto right = product(a, product(b, c));
        auto map = graphs_isomorphic(left, right);
        REQUIRE(map);
        CHECK(validate_isomorphism(left, right, *map));
      }
    }
  }
}

TEST_CASE("scaling") {
  auto y = young_lattice(5);
  CHECK(scale(y, 1) == y);
  auto y2 = scale(y, 2);
  CHECK(check_duality(y2, 4, 0, 4).ok());
  CHECK(path_count(y2, y2.at("2")) == 4);
  CHECK_THROWS_AS(scale(y, 0), Error);
}

TEST_CASE("wreath graphs") {
  CHECK(graphs_isomorphic(wreath_graph({1}, 4), young_lattice(4)));
  auto w11 = wreath_graph({1, 1}, 3);
  CHECK(graphs_isomorphic(w11, young_power(2, 3)));
  CHECK(check_duality(w11, 2, 0, 2).ok());
  CHECK(check_duality(wreath_graph({1, 1, 2}, 2), 6, 0, 1).ok());
}

TEST_CASE("wreath graphs are sum-of-squares dual") {
  const std::vector<std::vector<std::uint64_t>> dims = {{1}, {2}, {1, 1}, {1, 1, 2}};
  for (const auto& d : dims) {
    std::uint64_t r = 0;
    for (auto x : d) r += x * x;
    auto g = wreath_graph(d, 5);
    CHECK(check_duality(g, r, 0, 4).ok());
  }
}

TEST_CASE("wreath dimensions") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Partition> comps(3);
    comps[0] = Partition({n});
    CHECK(wreath_dim(PartitionTuple(comps)) == 1);
    if (n >= 2) {
      comps[0] = Partition({n - 1});
      comps[2] = Partition({1});
      CHECK(wreath_dim(PartitionTuple(comps)) == n);
    }
  }
  CHECK(wreath_dim(PartitionTuple::parse("1;1")) == 2);
}

TEST_CASE("wreath dimension equals e in Y^r") {
  for (int r = 1; r <= 3; ++r) {
    auto g = young_power(r, 6);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& t : partition_tuples_of(n, r)) {
        auto v = g.find(t.to_string());
        REQUIRE(v);
        CHECK(wreath_dim(t) == path_count(g, *v));
      }
    }
  }
}

TEST_CASE("standard tableau counts") {
  CHECK(syt_count(Partition({4})) == 1);
  CHECK(syt_count(Partition({2, 1})) == 2);
  CHECK(syt_count(Partition({3, 2})) == 5);
}

TEST_CASE("standard tableau counts match brute-force fillings") {
  for (int n = 0; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : partitions_of(n)) {
      const auto brute = oracle::brute_force_syt(p.parts());
      CHECK(syt_count(p) == brute);
      total += BigInt(brute) * brute;
    }
    CHECK(total == factorial(n));
  }
}

TEST_SUITE_END();
