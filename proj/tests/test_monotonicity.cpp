#include <doctest.h>

#include <random>
#include <set>

#include "monocone/catalog.hpp"
#include "monocone/error.hpp"
#include "monocone/monotonicity.hpp"
#include "oracles.hpp"

using namespace monocone;

namespace {

Functional random_functional(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  RationalVector c(coordinate_count(n));
  for (auto& x : c) x = num(rng);
  return Functional(n, c);
}

std::vector<int> all_systems(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

}  // namespace

TEST_SUITE("monotonicity") {

TEST_CASE("facets for n=2") {
  auto h = single_system_facets(1, 2);
  CHECK(h.dim == 3);
  CHECK(h.inequalities == RationalMatrix{{1, 0, 0}});
  CHECK(h.equalities == RationalMatrix{{1, 0, 1}});
}

TEST_CASE("facets for n=3 are lower-set indicators") {
  auto h = single_system_facets(2, 3);
  auto& sets = facet_lower_sets(2, 3);
  REQUIRE(h.inequalities.size() == 4);
  REQUIRE(sets.size() == 4);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (std::uint32_t m = 1; m < 8; ++m) {
      SystemSet s(m, 3);
      bool in = s.contains(2) && sets[k].contains(s);
      CHECK(h.inequalities[k][m - 1] == (in ? 1 : 0));
    }
  }
  REQUIRE(h.equalities.size() == 1);
  for (std::uint32_t m = 1; m < 8; ++m) CHECK(h.equalities[0][m - 1] == ((m & 2U) ? 1 : 0));
}

TEST_CASE("facet counts follow the lower set counts") {
  const std::size_t lower[] = {0, 2, 3, 6, 20, 168};
  for (int n = 1; n <= 5; ++n) {
    CHECK(single_system_facets(1, n).inequalities.size() == lower[n] - 2);
  }
  CHECK_THROWS_AS(single_system_facets(1, 7), OutOfRange);
  CHECK_THROWS_AS(single_system_facets(3, 2), OutOfRange);
}

TEST_CASE("generator sets") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto g = single_system_generators(i, n);
      CHECK(g.generators.rays.size() == static_cast<std::size_t>((n - 1) * (1 << n) / 4));
      CHECK(g.generators.lineality.size() == (std::size_t{1} << (n - 1)) - 1);
      CHECK(g.terms.size() == g.generators.rays.size());
      CHECK(g.free_subsets.size() == g.generators.lineality.size());
      for (std::size_t k = 0; k < g.terms.size(); ++k) {
        auto lo = g.terms[k].conditioning.with(i);
        auto hi = lo.with(g.terms[k].j);
        CHECK(g.generators.rays[k][lo.coordinate()] == 1);
        CHECK(g.generators.rays[k][hi.coordinate()] == -1);
      }
    }
  }
}

TEST_CASE("facets and generators form DD pairs for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto h = single_system_facets(i, n);
      auto g = single_system_generators(i, n).generators;
      auto report = verify_dd_pair(h, g);
      CHECK_MESSAGE(report.passed, "i=" << i << " n=" << n);
      auto v = dd_convert(h);
      CHECK(std::set<RationalVector>(v.rays.begin(), v.rays.end()) ==
            std::set<RationalVector>(g.rays.begin(), g.rays.end()));
    }
  }
}

TEST_CASE("balance defect") {
  CHECK(balance_defect(mutual_information(1, 2, 2)) == RationalVector{0, 0});
  Functional f(2, {1, 0, 0});
  CHECK(balance_defect(f) == RationalVector{1, 0});
}

TEST_CASE("verdicts for simple formulas") {
  auto mi = mutual_information(1, 2, 2);
  for (const auto& v : check_monotone(mi, {1, 2})) CHECK(v.satisfied());
  auto neg = check_monotone(-mi, {1, 2});
  REQUIRE(neg.size() == 2);
  CHECK(neg[0].violation == Violation::LowerSet);
  CHECK(neg[0].value == -1);
  CHECK(neg[0].lower_set->members() == std::vector<SystemSet>{SystemSet::of({1}, 2)});

  Functional entropy(2, {1, 0, 0});
  auto e = check_monotone(entropy, {1, 2});
  CHECK(e[0].violation == Violation::Balance);
  CHECK(e[0].value == 1);
  CHECK(e[1].satisfied());
  CHECK_THROWS_AS(check_monotone(mi, {3}), OutOfRange);
}

TEST_CASE("n=1 cone is the zero functional") {
  auto r = enumerate_monotone_rays(1);
  CHECK(r.rays.rays.empty());
  CHECK(r.rays.lineality.empty());
  CHECK(is_monotone(Functional(1), {1}));
  CHECK_FALSE(is_monotone(Functional(1, {1}), {1}));
  CHECK_FALSE(is_monotone(Functional(1, {-1}), {1}));
}

TEST_CASE("n=2 has the single ray I(1;2)") {
  auto r = enumerate_monotone_rays(2);
  REQUIRE(r.functionals.size() == 1);
  CHECK(r.functionals[0] == mutual_information(1, 2, 2));
}

TEST_CASE("n=3 rays match the brute-force enumerator") {
  auto h = monotonicity_cone(SystemSet::full(3));
  auto expected = oracle::extreme_rays(h.inequalities, h.equalities, h.dim);
  auto r = enumerate_monotone_rays(3);
  CHECK(r.functionals.size() == 7);
  CHECK(std::set<RationalVector>(r.rays.rays.begin(), r.rays.rays.end()) == expected);
  CHECK(expected.count(dual_total_correlation3().coeffs()) == 1);
}

TEST_CASE("monotonicity cone of a system subset") {
  auto h = monotonicity_cone({1, 3}, 3);
  CHECK(h.inequalities.size() == 8);
  CHECK(h.equalities.size() == 2);
  CHECK(h.inequalities == monotonicity_cone(SystemSet::of({1, 3}, 3)).inequalities);
}

TEST_CASE("decompositions reconstruct the formula") {
  auto cmi = conditional_mutual_information(1, 2, SystemSet::of({3}, 3), 3);
  std::vector<std::pair<Functional, std::vector<int>>> cases{{mutual_information(1, 2, 2), {1, 2}},
                                                             {dual_total_correlation3(), {1, 2, 3}},
                                                             {u_monotone4(), {1, 2, 3, 4}},
                                                             {cmi, {1, 2}}};
  CHECK_FALSE(is_monotone(cmi, {3}));
  for (const auto& [f, systems] : cases) {
    for (int i : systems) {
      auto c = decompose_monotone(f, i);
      CHECK(c.anchor == i);
      CHECK(c.reconstruct() == f);
      CHECK(verify_decomposition(c, f));
      for (const auto& [term, v] : c.v) CHECK(v >= 0);
    }
  }
}

TEST_CASE("tampered decompositions are rejected") {
  auto f = u_monotone4();
  auto c = decompose_monotone(f, 1);
  auto bad = c;
  bad.v.begin()->second += 1;
  CHECK_FALSE(verify_decomposition(bad, f));
  auto negative = c;
  negative.v[SsaTerm{2, SystemSet::of({3}, 4)}] = -1;
  CHECK_FALSE(verify_decomposition(negative, f));
  CHECK_FALSE(verify_decomposition(c, dual_total_correlation3().extended(4)));
}

TEST_CASE("non-monotones cannot be decomposed") {
  try {
    decompose_monotone(zhang_yeung4(), 1);
    FAIL("expected NotAMonotone");
  } catch (const NotAMonotone& e) {
    CHECK_FALSE(e.violated().empty());
  }
}

TEST_CASE("lifted partial trace") {
  auto lifted = lift_partial_trace(mutual_information(1, 2, 2), 1);
  CHECK(lifted == conditional_mutual_information(2, 3, SystemSet::of({1}, 3), 3));
}

TEST_CASE("verdicts are invariant under positive scaling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_functional(3, rng);
    auto a = check_monotone(f, all_systems(3));
    auto b = check_monotone(Rational(7, 3) * f, all_systems(3));
    for (int i = 0; i < 3; ++i) {
      CHECK(a[i].violation == b[i].violation);
      CHECK(a[i].lower_set == b[i].lower_set);
    }
  }
}

TEST_CASE("verdicts are equivariant under relabeling") {
  std::mt19937 rng(12);
  auto perms = all_permutations(4);
  std::vector<Functional> pool{u_monotone4(), zhang_yeung4(), dual_total_correlation3().extended(4)};
  for (int trial = 0; trial < 10; ++trial) pool.push_back(random_functional(4, rng));
  for (const auto& f : pool) {
    auto base = check_monotone(f, all_systems(4));
    for (int k = 0; k < 5; ++k) {
      const auto& s = perms[rng() % perms.size()];
      auto moved = check_monotone(permute_functional(f, s), all_systems(4));
      for (int i = 1; i <= 4; ++i) CHECK(moved[s(i) - 1].satisfied() == base[i - 1].satisfied());
    }
  }
}

TEST_CASE("random members of the cone pass") {
  std::mt19937 rng(13);
  auto rays = enumerate_monotone_rays(4).functionals;
  std::uniform_int_distribution<int> w(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Functional f(4);
    for (const auto& r : rays) f += Rational(w(rng)) * r;
    CHECK(is_monotone(f, all_systems(4)));
  }
}

}
