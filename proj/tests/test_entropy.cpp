#include <doctest.h>

#include <cmath>
#include <random>

#include "monocone/catalog.hpp"
#include "monocone/entropy.hpp"
#include "monocone/error.hpp"
#include "oracles.hpp"

using namespace monocone;

namespace {

JointDistribution uniform_over(std::vector<int> vars, std::vector<int> card, std::vector<std::vector<int>> outcomes) {
  JointDistribution d{std::move(vars), std::move(card), {}};
  for (auto& o : outcomes) d.atoms.push_back({std::move(o), Rational(1, static_cast<long>(outcomes.size()))});
  return d;
}

// m variables, each a pair of random GF(2) linear forms of k uniform bits.
JointDistribution random_linear(std::mt19937& rng, int m, int k) {
  std::vector<std::pair<unsigned, unsigned>> forms(m);
  for (auto& f : forms) f = {rng() % (1U << k), rng() % (1U << k)};
  JointDistribution d;
  for (int v = 1; v <= m; ++v) {
    d.variables.push_back(v);
    d.cardinalities.push_back(4);
  }
  for (unsigned x = 0; x < (1U << k); ++x) {
    Atom a;
    for (auto [f, g] : forms) a.outcome.push_back(__builtin_parity(f & x) + 2 * __builtin_parity(g & x));
    a.p = Rational(1, 1L << k);
    d.atoms.push_back(a);
  }
  return canonicalize(d);
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("perfectly correlated bits") {
  auto d = uniform_over({1, 2}, {2, 2}, {{0, 0}, {1, 1}});
  auto h = shannon_entropy_vector(d);
  CHECK(h.exact);
  CHECK(h.values == RationalVector{1, 1, 1});
  CHECK(evaluate(mutual_information(1, 2, 2), h).value == 1);
}

TEST_CASE("XOR triple") {
  auto d = uniform_over({1, 2, 3}, {2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto h = shannon_entropy_vector(d);
  CHECK(h.values == RationalVector{1, 1, 2, 1, 2, 2, 2});
  auto j = evaluate(dual_total_correlation3(), h);
  CHECK(j.exact);
  CHECK(j.value == 2);
  CHECK(conditional_entropy(h, SystemSet::of({3}, 3), SystemSet::of({1, 2}, 3)) == 0);
  CHECK(conditional_entropy(h, SystemSet::of({3}, 3), SystemSet::of({1}, 3)) == 1);
}

TEST_CASE("variable labels select the system") {
  auto d = uniform_over({2, 1}, {2, 4}, {{0, 0}, {1, 1}, {0, 2}, {1, 3}});
  auto h = shannon_entropy_vector(d);
  CHECK(h[SystemSet::of({1}, 2)] == 2);
  CHECK(h[SystemSet::of({2}, 2)] == 1);
  CHECK(h[SystemSet::of({1, 2}, 2)] == 2);
}

TEST_CASE("dyadic distributions match the marginal-table oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    auto d = random_linear(rng, m, 4);
    auto h = shannon_entropy_vector(d);
    auto expected = oracle::entropies(d);
    CHECK(h.exact);
    for (std::uint32_t s = 1; s < (1U << m); ++s) CHECK(h.values[s - 1] == expected[s]);
  }
}

TEST_CASE("non-dyadic probabilities are flagged") {
  auto d = uniform_over({1}, {3}, {{0}, {1}, {2}});
  auto h = shannon_entropy_vector(d);
  CHECK_FALSE(h.exact);
  CHECK(h.precision_bits == 64);
  CHECK(std::abs(h.values[0].get_d() - std::log2(3.0)) < 1e-15);
  CHECK(h.values[0].get_den() <= mpz_class(1) << 64);
  auto e = evaluate(Functional(1, {1}), h);
  CHECK_FALSE(e.exact);
}

TEST_CASE("validation") {
  auto bad_sum = uniform_over({1}, {2}, {{0}, {1}});
  bad_sum.atoms[0].p = Rational(1, 4);
  CHECK_THROWS_AS(bad_sum.validate(), InvalidArgument);
  auto range = uniform_over({1}, {2}, {{0}, {2}});
  CHECK_THROWS_AS(range.validate(), InvalidArgument);
  auto repeat = uniform_over({1}, {2}, {{0}, {0}});
  CHECK_THROWS_AS(repeat.validate(), InvalidArgument);
  auto labels = uniform_over({1, 3}, {2, 2}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(labels.validate(), InvalidArgument);
  auto width = uniform_over({1, 2}, {2, 2}, {{0}, {1}});
  CHECK_THROWS_AS(width.validate(), InvalidArgument);
  CHECK_THROWS_AS(shannon_entropy_vector(range), InvalidArgument);
}

TEST_CASE("canonicalization merges and sorts") {
  JointDistribution d{{1}, {2}, {{{1}, Rational(1, 4)}, {{0}, Rational(1, 2)}, {{1}, Rational(1, 4)}}};
  auto c = canonicalize(d);
  REQUIRE(c.atoms.size() == 2);
  CHECK(c.atoms[0].outcome == std::vector<int>{0});
  CHECK(c.atoms[1].p == Rational(1, 2));
}

TEST_CASE("evaluation checks dimensions") {
  auto d = uniform_over({1, 2}, {2, 2}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(evaluate(u_monotone4(), shannon_entropy_vector(d)), DimensionMismatch);
}

}
