#include <doctest.h>

#include <set>

#include "monocone/error.hpp"
#include "monocone/subset_lattice.hpp"
#include "oracles.hpp"

using namespace monocone;

TEST_SUITE("subset_lattice") {

TEST_CASE("system sets and coordinates") {
  auto s = SystemSet::of({1, 3}, 3);
  CHECK(s.mask() == 0b101);
  CHECK(s.coordinate() == 4);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_string() == "{1,3}");
  CHECK(s.key() == "1,3");
  CHECK(s.members() == std::vector<int>{1, 3});
  CHECK(s.with(2) == SystemSet::full(3));
  CHECK(s.without(1) == SystemSet::of({3}, 3));
  CHECK(SystemSet(0, 3).to_string() == "{}");
  CHECK(coordinate_count(1) == 1);
  CHECK(coordinate_count(4) == 15);
}

TEST_CASE("subset keys parse back") {
  for (std::uint32_t m = 1; m < 32; ++m) {
    SystemSet s(m, 5);
    CHECK(parse_system_set(s.key(), 5) == s);
    CHECK(parse_system_set(s.to_string(), 5) == s);
  }
  CHECK(parse_system_set(" 2, 1 ", 3) == SystemSet::of({1, 2}, 3));
  CHECK_THROWS_AS(parse_system_set("1,x", 3), ParseError);
  CHECK_THROWS_AS(parse_system_set("4", 3), ParseError);
  CHECK_THROWS_AS(parse_system_set("0", 3), ParseError);
  CHECK_THROWS_AS(parse_system_set("99999999999", 3), ParseError);
}

TEST_CASE("subsets containing a system") {
  auto p = subsets_containing(2, 3);
  REQUIRE(p.size() == 4);
  CHECK(p[0] == SystemSet::of({2}, 3));
  CHECK(p[1] == SystemSet::of({1, 2}, 3));
  CHECK(p[2] == SystemSet::of({2, 3}, 3));
  CHECK(p[3] == SystemSet::full(3));
  CHECK_THROWS_AS(subsets_containing(4, 3), OutOfRange);
  CHECK_THROWS_AS(subsets_containing(1, 0), OutOfRange);
}

TEST_CASE("lower set predicate") {
  auto one = SystemSet::of({1}, 3);
  auto twelve = SystemSet::of({1, 2}, 3);
  auto thirteen = SystemSet::of({1, 3}, 3);
  CHECK(is_lower_set(LowerSetFamily::from_members(1, 3, {one, twelve})));
  CHECK(is_lower_set(LowerSetFamily::from_members(1, 3, {one, twelve, thirteen})));
  CHECK_FALSE(is_lower_set(LowerSetFamily::from_members(1, 3, {twelve})));
  CHECK_FALSE(is_lower_set(LowerSetFamily::from_members(1, 3, {one, SystemSet::full(3)})));
  CHECK(is_lower_set(LowerSetFamily(1, 3, 0)));
  CHECK_THROWS_AS(LowerSetFamily::from_members(1, 3, {SystemSet::of({2}, 3)}), InvalidArgument);
}

TEST_CASE("lower set family accessors") {
  LowerSetFamily f = LowerSetFamily::from_members(2, 3, {SystemSet::of({2}, 3), SystemSet::of({2, 3}, 3)});
  CHECK(f.size() == 2);
  CHECK(f.poset_size() == 4);
  CHECK(f.element(0) == SystemSet::of({2}, 3));
  CHECK(f.element_index(SystemSet::of({2, 3}, 3)) == 2);
  CHECK(f.contains(SystemSet::of({2, 3}, 3)));
  CHECK_FALSE(f.contains(SystemSet::of({1, 2}, 3)));
  CHECK_FALSE(f.is_empty());
  CHECK_FALSE(f.is_full());
  CHECK(f.to_string() == "{{2}, {2,3}}");
}

TEST_CASE("enumeration for n=1 and n=2") {
  auto one = enumerate_lower_sets(1, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].is_empty());
  CHECK(one[1].is_full());

  auto two = enumerate_lower_sets(1, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].is_empty());
  CHECK(two[1].members() == std::vector<SystemSet>{SystemSet::of({1}, 2)});
  CHECK(two[2].is_full());
}

TEST_CASE("enumeration matches the brute-force filter") {
  const std::size_t expected[] = {0, 2, 3, 6, 20, 168};
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto fast = enumerate_lower_sets(i, n);
      CHECK(fast.size() == expected[n]);
      std::set<std::set<std::uint32_t>> got;
      for (const auto& f : fast) {
        std::set<std::uint32_t> masks;
        for (auto s : f.members()) masks.insert(s.mask());
        got.insert(masks);
      }
      auto oracle_sets = oracle::lower_sets(i, n);
      CHECK(got == std::set<std::set<std::uint32_t>>(oracle_sets.begin(), oracle_sets.end()));
    }
  }
}

TEST_CASE("recursive and brute-force enumerators agree") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_lower_sets_recursive(n, n) == enumerate_lower_sets_brute_force(n, n));
  }
}

TEST_CASE("n=6 gives the Dedekind number M(5)") {
  auto all = enumerate_lower_sets(3, 6);
  CHECK(all.size() == 7581);
  std::set<std::uint64_t> distinct;
  for (const auto& f : all) {
    CHECK(is_lower_set(f));
    distinct.insert(f.bits());
  }
  CHECK(distinct.size() == all.size());
}

TEST_CASE("enumeration order is by size then bits") {
  auto all = enumerate_lower_sets(1, 4);
  for (std::size_t k = 1; k < all.size(); ++k) {
    auto a = std::pair(all[k - 1].size(), all[k - 1].bits());
    auto b = std::pair(all[k].size(), all[k].bits());
    CHECK(a < b);
  }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_lower_sets(1, 7), OutOfRange);
  CHECK_THROWS_AS(enumerate_lower_sets(0, 3), OutOfRange);
  CHECK_THROWS_AS(enumerate_lower_sets_brute_force(1, 6), OutOfRange);
}

}
