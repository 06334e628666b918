#include <catch2/catch_amalgamated.hpp>

#include "shapelab/posets.hpp"
#include "shapelab/random_instances.hpp"

using shapelab::ValidationError;
using namespace shapelab::posets;
namespace ri = shapelab::random_instances;

TEST_CASE("chains and singletons", "[posets]") {
  DirectedPoset c = DirectedPoset::chain(3);
  CHECK(c.size() == 3);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 0));
  CHECK(c.leq(1, 1));
  CHECK(DirectedPoset::singleton().size() == 1);
  CHECK_THROWS_AS(c.leq(0, 3), std::invalid_argument);
  CHECK(c == DirectedPoset::chain(3));
  CHECK_FALSE(c == DirectedPoset::chain(2));
}

TEST_CASE("validation rejects non-preorders", "[posets]") {
  SECTION("missing reflexivity") {
    std::vector<std::uint8_t> leq{1, 0, 0, 0};
    auto r = DirectedPoset::check(2, leq);
    CHECK_FALSE(r.ok);
    CHECK(r.code == "not-reflexive");
    CHECK(r.witness == std::vector<long>{1});
  }
  SECTION("missing transitivity") {
    // 0 <= 1 <= 2 without 0 <= 2.
    auto r = DirectedPoset::check(3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
    CHECK_FALSE(r.ok);
    CHECK(r.code == "not-transitive");
    CHECK(r.witness == std::vector<long>{0, 1, 2});
  }
  SECTION("no upper bound") {
    // Two incomparable elements.
    auto r = DirectedPoset::check(2, {1, 0, 0, 1});
    CHECK_FALSE(r.ok);
    CHECK(r.code == "not-directed");
    CHECK(r.witness == std::vector<long>{0, 1});
    CHECK_THROWS_AS(DirectedPoset::create(2, {1, 0, 0, 1}), ValidationError);
  }
  SECTION("wrong buffer size") {
    CHECK(DirectedPoset::check(2, {1, 1, 1}).code == "bad-size");
  }
}

TEST_CASE("preorders may identify elements", "[posets]") {
  // 0 <= 1 and 1 <= 0: legal, the two elements are equivalent.
  DirectedPoset p = DirectedPoset::create(2, {1, 1, 1, 1});
  CHECK(p.equivalent(0, 1));
  CHECK_FALSE(DirectedPoset::chain(2).equivalent(0, 1));
  CHECK(find_top(p) == 0);
}

TEST_CASE("from_pairs builds the reflexive closure", "[posets]") {
  DirectedPoset p = DirectedPoset::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p == DirectedPoset::chain(3));
  // Transitivity is not inferred; an incomplete pair list is rejected.
  CHECK_THROWS_AS(DirectedPoset::from_pairs(3, {{0, 1}, {1, 2}}),
                  ValidationError);
}

TEST_CASE("order maps", "[posets]") {
  DirectedPoset c2 = DirectedPoset::chain(2);
  DirectedPoset c3 = DirectedPoset::chain(3);

  OrderMap up(c2, c3, {0, 2});
  CHECK(up(0) == 0);
  CHECK(up(1) == 2);

  CHECK(OrderMap::check(c2, c3, {0}).code == "bad-map");
  CHECK(OrderMap::check(c2, c3, {0, 5}).code == "bad-map");
  auto r = OrderMap::check(c3, c3, {2, 1, 2});
  CHECK(r.code == "not-monotone");
  CHECK(r.witness == std::vector<long>{0, 1});
  CHECK_THROWS_AS(OrderMap(c3, c3, {2, 1, 2}), ValidationError);

  OrderMap id3 = identity_order_map(c3);
  OrderMap both = compose(id3, up);
  CHECK(both.map == std::vector<long>{0, 2});
  CHECK_THROWS_AS(compose(up, up), std::invalid_argument);
}

TEST_CASE("cofinality and directed subsets", "[posets]") {
  DirectedPoset c4 = DirectedPoset::chain(4);
  CHECK(is_cofinal({3}, c4));
  CHECK_FALSE(is_cofinal({0}, c4));
  CHECK(is_cofinal({1, 3}, c4));
  CHECK(is_directed_subset({0, 2}, c4));

  // Vee: 0 and 1 both below 2 but incomparable to each other.
  DirectedPoset vee = DirectedPoset::from_pairs(3, {{0, 2}, {1, 2}});
  CHECK_FALSE(is_directed_subset({0, 1}, vee));
  CHECK(is_directed_subset({0, 1, 2}, vee));
  CHECK(is_cofinal({2}, vee));
  CHECK_FALSE(is_cofinal({0, 1}, vee));

  CHECK_THROWS_AS(is_cofinal({7}, c4), std::invalid_argument);
  CHECK_THROWS_AS(is_directed_subset({1, 1}, c4), std::invalid_argument);
}

TEST_CASE("find_top", "[posets]") {
  CHECK(find_top(DirectedPoset::chain(5)) == 4);
  CHECK(find_top(DirectedPoset::singleton()) == 0);
  // With equivalent maximal elements the smallest index wins.
  DirectedPoset p = DirectedPoset::create(
      3, {1, 1, 1, 0, 1, 1, 0, 1, 1});
  CHECK(find_top(p) == 1);
}

TEST_CASE("poset restriction", "[posets]") {
  DirectedPoset c5 = DirectedPoset::chain(5);
  DirectedPoset r = restrict_poset(c5, {1, 3});
  CHECK(r == DirectedPoset::chain(2));

  DirectedPoset vee = DirectedPoset::from_pairs(3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(restrict_poset(vee, {0, 1}), ValidationError);
  CHECK(restrict_poset(vee, {0, 2}) == DirectedPoset::chain(2));
}

TEST_CASE("random posets are valid and have a top", "[posets]") {
  ri::Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    DirectedPoset p = ri::random_directed_poset(rng, 8);
    std::vector<std::uint8_t> flat;
    for (long a = 0; a < p.size(); ++a)
      for (long b = 0; b < p.size(); ++b) flat.push_back(p.leq(a, b) ? 1 : 0);
    CHECK(DirectedPoset::check(p.size(), flat).ok);
    auto top = find_top(p);
    REQUIRE(top.has_value());
    for (long a = 0; a < p.size(); ++a) CHECK(p.leq(a, *top));
    auto lv = ri::level_function(p);
    for (long a = 0; a < p.size(); ++a)
      for (long b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) CHECK(lv[a] <= lv[b]);
  }
}
