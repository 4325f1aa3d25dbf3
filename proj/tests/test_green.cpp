#include "doctest.h"
#include "semigraph/green.hpp"
#include "semigraph/rees.hpp"

using namespace semigraph;

namespace {

std::vector<std::vector<int>> universal(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return {all};
}

std::vector<std::vector<int>> singletons(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) out.push_back({i});
  return out;
}

}  // namespace

TEST_CASE("groups have a single class under every relation") {
  auto s = FiniteSemigroup::cyclic_group(6);
  auto g = green_classes(s);
  CHECK(g.l.blocks == universal(6));
  CHECK(g.r.blocks == universal(6));
  CHECK(g.j.blocks == universal(6));
  CHECK(g.h.blocks == universal(6));
  CHECK(g.d.blocks == universal(6));
  CHECK(h_class_is_group(s, g, 0));
  CHECK(is_completely_regular(s, g));
}

TEST_CASE("left zero band splits L and R asymmetrically") {
  auto s = FiniteSemigroup::left_zero_band(3);
  auto g = green_classes(s);
  // tx = t for every t, so Sx is everything and L has one class; xt = x makes
  // the R-classes singletons.
  CHECK(g.l.blocks == universal(3));
  CHECK(g.r.blocks == singletons(3));
  CHECK(g.h.blocks == singletons(3));
  CHECK(g.j.blocks == universal(3));
  CHECK(g.d.blocks == universal(3));
  CHECK(is_completely_regular(s, g));
  CHECK(g.d.block_containing(1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("trivial semigroup") {
  auto s = FiniteSemigroup::cyclic_group(1);
  auto g = green_classes(s);
  CHECK(g.h.blocks == universal(1));
  CHECK(h_class_is_group(s, 0));
}

TEST_CASE("monogenic M(5,6) classes collapse on the kernel") {
  auto s = FiniteSemigroup::monogenic(5, 6);
  auto g = green_classes(s);
  const std::vector<std::vector<int>> expected{
      {0}, {1}, {2}, {3}, {4, 5, 6, 7, 8, 9}};
  CHECK(g.l.blocks == expected);
  CHECK(g.r.blocks == expected);  // commutative, so the relations coincide
  CHECK(g.j.blocks == expected);
  CHECK(g.h.blocks == expected);
  CHECK(g.d.blocks == expected);
  CHECK(g.h.block_containing(5) == std::vector<int>{4, 5, 6, 7, 8, 9});
  CHECK(h_class_is_group(s, g, 5));
  CHECK_FALSE(is_completely_regular(s, g));
  SUBCASE("H-class group test demands an idempotent") {
    try {
      h_class_is_group(s, g, 0);
      FAIL("expected NotIdempotent");
    } catch (const NotIdempotent& e) {
      CHECK(e.element == 0);
    }
  }
}

TEST_CASE("sandwich-matrix example is 0-simple") {
  auto rs = rees_matrix(
      ReesSpec{FiniteSemigroup::cyclic_group(1), 2, 2,
               {0, ReesSpec::kZeroEntry, ReesSpec::kZeroEntry, 0}});
  auto g = green_classes(rs.semigroup);
  // L-classes group by the Lambda coordinate, R-classes by the I coordinate.
  CHECK(g.l.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}, {4}});
  CHECK(g.r.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
  CHECK(g.h.blocks == singletons(5));
  CHECK(g.j.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}, {4}});
  CHECK(g.d.blocks == g.j.blocks);
  CHECK(h_class_is_group(rs.semigroup, g, 4));
  CHECK_FALSE(is_completely_regular(rs.semigroup, g));
}

TEST_CASE("D equals J on small semigroups") {
  std::vector<FiniteSemigroup> items;
  items.push_back(FiniteSemigroup::monogenic(3, 4));
  items.push_back(FiniteSemigroup::left_zero_band(5));
  items.push_back(FiniteSemigroup::direct_product(
      FiniteSemigroup::cyclic_group(2), FiniteSemigroup::left_zero_band(2)));
  for (const auto& s : items) {
    auto g = green_classes(s);
    CHECK(g.d.blocks == g.j.blocks);
    // H refines both L and R.
    for (int x = 0; x < s.size(); ++x)
      for (int y : g.h.block_containing(x)) {
        CHECK(g.l.block_of[x] == g.l.block_of[y]);
        CHECK(g.r.block_of[x] == g.r.block_of[y]);
      }
  }
}
