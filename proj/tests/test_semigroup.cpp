#include <random>
#include <vector>

#include "doctest.h"
#include "semigraph/semigroup.hpp"

using namespace semigraph;

TEST_CASE("from_table validates and constructs") {
  SUBCASE("trivial semigroup") {
    auto s = FiniteSemigroup::from_table(1, {0});
    CHECK(s.size() == 1);
    CHECK(s.product(0, 0) == 0);
    CHECK(s.is_idempotent(0));
  }
  SUBCASE("Z2") {
    auto s = FiniteSemigroup::from_table(2, {0, 1, 1, 0});
    CHECK(s.product(1, 1) == 0);
    CHECK(s.profile(1).index == 1);
    CHECK(s.profile(1).period == 2);
    CHECK(s.identity() == 0);
  }
  SUBCASE("non-associative table reports the first failing triple") {
    // 0*0=1 makes (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1; triples are
    // scanned in (x,y,z) order and (0,0,0) still associates, so the witness
    // is (0,0,1).
    try {
      FiniteSemigroup::from_table(2, {1, 0, 0, 0});
      FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
      CHECK(e.x == 0);
      CHECK(e.y == 0);
      CHECK(e.z == 1);
    }
  }
  SUBCASE("entry out of range") {
    try {
      FiniteSemigroup::from_table(2, {2, 0, 0, 0});
      FAIL("expected EntryOutOfRange");
    } catch (const EntryOutOfRange& e) {
      CHECK(e.row == 0);
      CHECK(e.col == 0);
    }
  }
  SUBCASE("bad label count") {
    CHECK_THROWS_AS(FiniteSemigroup::from_table(1, {0}, {"a", "b"}),
                    InvalidParams);
  }
}

TEST_CASE("serial and parallel associativity scans agree") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> table(n * n);
    for (auto& v : table) v = static_cast<int>(rng() % n);
    CHECK(find_nonassociative_triple_serial(n, table) ==
          find_nonassociative_triple(n, table));
  }
  // A valid table yields no witness on either path.
  std::vector<int> z6(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) z6[i * 6 + j] = (i + j) % 6;
  CHECK_FALSE(find_nonassociative_triple_serial(6, z6).has_value());
  CHECK_FALSE(find_nonassociative_triple(6, z6).has_value());
}

TEST_CASE("monogenic construction M(m,r)") {
  SUBCASE("M(1,6) is a group of index-1 elements") {
    auto s = FiniteSemigroup::monogenic(1, 6);
    CHECK(is_group(s));
    for (int x = 0; x < s.size(); ++x) CHECK(s.profile(x).index == 1);
  }
  SUBCASE("M(2,3): a^5 = a^2") {
    auto s = FiniteSemigroup::monogenic(2, 3);
    CHECK(s.size() == 4);
    CHECK(s.power(0, 5) == s.power(0, 2));
    CHECK(s.exponent() == 3);
  }
  SUBCASE("M(5,6) power structure") {
    auto s = FiniteSemigroup::monogenic(5, 6);
    CHECK(s.size() == 10);
    CHECK(s.label(0) == "a^1");
    CHECK(s.label(9) == "a^10");
    CHECK(s.power(0, 12) == 5);  // a^12 = a^6
    const auto& p = s.profile(0);
    CHECK(p.index == 5);
    CHECK(p.period == 6);
    CHECK(p.order == 10);
    CHECK(p.kernel == std::vector<int>{4, 5, 6, 7, 8, 9});
    CHECK(p.idempotent_power == 5);   // a^6
    CHECK(p.kernel_generator == 6);   // a^7
    CHECK(s.idempotents() == std::vector<int>{5});
    CHECK(s.exponent() == 6);
    // a^3 generates {a^3, a^6, a^9} with index 2, period 2.
    CHECK(s.generated_by(2) == std::vector<int>{2, 5, 8});
    CHECK(s.profile(2).index == 2);
    CHECK(s.profile(2).period == 2);
    CHECK(s.profile(2).kernel == std::vector<int>{5, 8});
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(FiniteSemigroup::monogenic(0, 3), InvalidParams);
    CHECK_THROWS_AS(FiniteSemigroup::monogenic(3, 0), InvalidParams);
  }
}

TEST_CASE("cyclic group matches monogenic(1,n) up to power relabeling") {
  auto c = FiniteSemigroup::cyclic_group(6);
  auto m = FiniteSemigroup::monogenic(1, 6);
  // id k in the monogenic table is a^(k+1); map it to g^((k+1) mod 6).
  auto phi = [](int k) { return (k + 1) % 6; };
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(c.product(phi(x), phi(y)) == phi(m.product(x, y)));
  CHECK(c.identity() == 0);
  CHECK(is_group(c));
}

TEST_CASE("left zero band") {
  auto s = FiniteSemigroup::left_zero_band(3);
  CHECK(s.is_band());
  CHECK(s.product(1, 2) == 1);
  CHECK(s.product(2, 1) == 2);
  CHECK_FALSE(s.identity().has_value());
}

TEST_CASE("direct products") {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  auto z3 = FiniteSemigroup::cyclic_group(3);
  SUBCASE("Z2 x Z3 has the orders of Z6") {
    auto p = FiniteSemigroup::direct_product(z2, z3);
    CHECK(p.size() == 6);
    CHECK(p.pi_set() == std::set<int>{1, 2, 3, 6});
    CHECK(is_group(p));
  }
  SUBCASE("trivial x S is a copy of S") {
    auto t = FiniteSemigroup::cyclic_group(1);
    auto p = FiniteSemigroup::direct_product(t, z3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(p.product(x, y) == z3.product(x, y));
  }
  SUBCASE("Klein four-group is not cyclic") {
    auto k4 = FiniteSemigroup::direct_product(z2, z2);
    CHECK(k4.pi_set() == std::set<int>{1, 2});
    CHECK(is_group(k4));
  }
}

TEST_CASE("power requires a positive exponent") {
  auto s = FiniteSemigroup::cyclic_group(4);
  CHECK(s.power(1, 4) == 0);
  CHECK_THROWS_AS(s.power(1, 0), OutOfRange);
  CHECK_THROWS_AS(s.power(7, 2), OutOfRange);
}

TEST_CASE("closure") {
  auto s = FiniteSemigroup::monogenic(5, 6);
  SUBCASE("single generator matches the power chain") {
    CHECK(closure(s, {2}) == std::vector<int>{2, 5, 8});
    CHECK(closure(s, {0}) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  }
  SUBCASE("a^3 and a^7 generate a 7-element subsemigroup") {
    // 17 = 3 + 2*7 reduces to 5, so a^5 shows up alongside a^3, a^6..a^10.
    CHECK(closure(s, {2, 6}) == std::vector<int>{2, 4, 5, 6, 7, 8, 9});
  }
  SUBCASE("empty generating set") {
    CHECK_THROWS_AS(closure(s, {}), EmptyGeneratingSet);
  }
}

TEST_CASE("monogenic and group subset tests") {
  auto s = FiniteSemigroup::monogenic(5, 6);
  SUBCASE("kernel is monogenic and a group") {
    const auto kernel = s.profile(0).kernel;
    CHECK(is_monogenic_subset(s, kernel).has_value());
    CHECK(is_group_subset(s, kernel));
  }
  SUBCASE("whole M(5,6) is monogenic but not a group") {
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(is_monogenic_subset(s, all) == 0);
    CHECK_FALSE(is_group_subset(s, all));
  }
  SUBCASE("non-closed subset") {
    auto m23 = FiniteSemigroup::monogenic(2, 3);
    try {
      is_monogenic_subset(m23, {0, 1});  // a*a^2 = a^3 escapes
      FAIL("expected NotASubsemigroup");
    } catch (const NotASubsemigroup& e) {
      CHECK(e.x == 0);
      CHECK(e.y == 1);
    }
    CHECK_FALSE(is_group_subset(m23, {0, 1}));
  }
}

TEST_CASE("S_f partition blocks cover the semigroup disjointly") {
  auto s = FiniteSemigroup::monogenic(5, 6);
  auto blocks = s_f_partition(s);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks.begin()->first == 5);
  CHECK(blocks.begin()->second.size() == 10);

  auto band = FiniteSemigroup::left_zero_band(4);
  auto bb = s_f_partition(band);
  CHECK(bb.size() == 4);
  for (const auto& [f, block] : bb) CHECK(block == std::vector<int>{f});
}

TEST_CASE("element order never exceeds twice the exponent") {
  for (int m = 1; m <= 10; ++m)
    for (int r = 1; m + r - 1 <= 10; ++r) {
      auto s = FiniteSemigroup::monogenic(m, r);
      const int e = s.exponent();
      for (int x = 0; x < s.size(); ++x) CHECK(s.order_of(x) <= 2 * e);
    }
}

TEST_CASE("construction validation toggle") {
  set_validate_constructions(false);
  CHECK_FALSE(validate_constructions());
  auto s = FiniteSemigroup::monogenic(40, 40);  // skips the O(n^3) recheck
  CHECK(s.size() == 79);
  set_validate_constructions(true);
  CHECK(validate_constructions());
}
