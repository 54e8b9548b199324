#include <doctest.h>

#include "monocone/catalog.hpp"
#include "monocone/error.hpp"
#include "monocone/monotonicity.hpp"
#include "monocone/witness.hpp"
#include "oracles.hpp"

using namespace monocone;

TEST_SUITE("witness") {

TEST_CASE("facet witnesses realise the conditional entropy pattern for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (const auto& lower : enumerate_lower_sets(i, n)) {
        if (lower.is_empty() || lower.is_full()) continue;
        auto d = facet_witness_distribution(lower);
        CHECK(d.variable_count() == static_cast<std::size_t>(n + 1));
        auto h = oracle::entropies(d);
        const std::uint32_t aux = 1U << n;
        for (const auto& s : subsets_containing(i, n)) {
          Rational cond = h[s.mask() | aux] - h[s.mask()];
          CHECK(cond == (lower.contains(s) ? 1 : 0));
        }
        CHECK(h[1U << (i - 1)] == 0);
      }
    }
  }
}

TEST_CASE("witness rejects trivial or non-lower families") {
  CHECK_THROWS_AS(facet_witness_distribution(LowerSetFamily(1, 3, 0)), InvalidArgument);
  CHECK_THROWS_AS(facet_witness_distribution(LowerSetFamily(1, 3, 0b1111)), InvalidArgument);
  CHECK_THROWS_AS(facet_witness_distribution(LowerSetFamily(1, 3, 0b0010)), InvalidArgument);
}

TEST_CASE("balance witnesses") {
  auto [low, high] = balance_witness(2, 3);
  auto hl = shannon_entropy_vector(low);
  auto hh = shannon_entropy_vector(high);
  CHECK(hl[SystemSet::of({2}, 3)] == 0);
  CHECK(hh[SystemSet::of({2}, 3)] == 1);
  CHECK(hh[SystemSet::full(3)] - hl[SystemSet::full(3)] == 1);
  CHECK(hl[SystemSet::of({1, 3}, 3)] == hh[SystemSet::of({1, 3}, 3)]);
}

TEST_CASE("Zhang-Yeung certificates for every system") {
  auto zy = zhang_yeung4();
  auto all = violation_certificates(zy, {1, 2, 3, 4});
  REQUIRE(all.size() == 4);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& c = all[k];
    CHECK(c.system == static_cast<int>(k) + 1);
    CHECK(c.operation == LocalOperation::TraceAuxiliary);
    CHECK(c.lower_set.has_value());
    CHECK(c.value_after > c.value_before);
    CHECK(verify_certificate(c));
    CHECK(evaluate(zy, c.before).value == c.value_before);
  }
  auto first = violation_certificate(zy, {3, 1});
  REQUIRE(first.has_value());
  CHECK(first->system == 3);
}

TEST_CASE("monotones have no certificate") {
  CHECK_FALSE(violation_certificate(u_monotone4(), {1, 2, 3, 4}).has_value());
  CHECK(violation_certificates(dual_total_correlation3(), {1, 2, 3}).empty());
}

TEST_CASE("balance violations") {
  Functional gain(2, {1, 0, 0});
  auto up = violation_certificate(gain, {1});
  REQUIRE(up.has_value());
  CHECK(up->operation == LocalOperation::AppendAuxiliary);
  CHECK_FALSE(up->lower_set.has_value());
  CHECK(verify_certificate(*up));

  Functional loss(2, {0, 0, -1});
  auto down = violation_certificate(loss, {1});
  REQUIRE(down.has_value());
  CHECK(down->operation == LocalOperation::TraceAuxiliary);
  CHECK(verify_certificate(*down));
}

TEST_CASE("tampered certificates fail verification") {
  auto c = *violation_certificate(zhang_yeung4(), {1});
  auto value = c;
  value.value_after += 1;
  CHECK_FALSE(verify_certificate(value));
  auto target = c;
  target.target = -target.target;
  CHECK_FALSE(verify_certificate(target));
  auto entropy = c;
  entropy.before.values[0] += 1;
  CHECK_FALSE(verify_certificate(entropy));
  auto op = c;
  op.operation = LocalOperation::AppendAuxiliary;
  CHECK_FALSE(verify_certificate(op));
  auto system = c;
  system.system = 2;
  CHECK_FALSE(verify_certificate(system));
}

TEST_CASE("merged and removed entropy vectors") {
  auto lower = facet_witness_distribution(facet_lower_sets(1, 2).front());
  auto [merged, removed] = merged_and_removed(shannon_entropy_vector(lower), 1);
  CHECK(merged.n == 2);
  CHECK(removed.n == 2);
  CHECK(merged[SystemSet::of({1}, 2)] - removed[SystemSet::of({1}, 2)] == 1);
}

}
