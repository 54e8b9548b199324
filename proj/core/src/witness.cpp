#include "monocone/witness.hpp"

#include "monocone/error.hpp"
#include "monocone/monotonicity.hpp"

namespace monocone {

namespace {

struct ShareLayout {
  // Owner system of each share bit; shares of one minimal set are contiguous.
  std::vector<int> owner;
  // [first, last) share indices per minimal qualified set.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
};

std::vector<SystemSet> minimal_qualified_sets(const LowerSetFamily& lower_set) {
  const int i = lower_set.anchor();
  std::vector<SystemSet> qualified;
  for (SystemSet j : subsets_containing(i, lower_set.n())) {
    if (!lower_set.contains(j)) qualified.push_back(j.without(i));
  }
  std::vector<SystemSet> minimal;
  for (SystemSet q : qualified) {
    bool is_minimal = true;
    for (SystemSet other : qualified) {
      if (other != q && other.is_subset_of(q)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(q);
  }
  return minimal;
}

// Distribution over labels 1..n+1 from a deterministic map of uniform bits.
template <class Assign>
JointDistribution from_uniform_bits(int variables, std::vector<int> cardinalities, int bits, Assign assign) {
  JointDistribution d;
  for (int s = 1; s <= variables; ++s) d.variables.push_back(s);
  d.cardinalities = std::move(cardinalities);
  const Rational p(1, Integer(1) << bits);
  for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << bits); ++seed) {
    d.atoms.push_back({assign(seed), p});
  }
  return canonicalize(std::move(d));
}

EntropyVector restrict_to(const EntropyVector& h, int n, const std::vector<std::uint32_t>& mask_map) {
  EntropyVector out;
  out.n = n;
  out.exact = h.exact;
  out.precision_bits = h.precision_bits;
  out.values.resize(coordinate_count(n));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) out.values[mask - 1] = h.values[mask_map[mask] - 1];
  return out;
}

}  // namespace

JointDistribution facet_witness_distribution(const LowerSetFamily& lower_set) {
  if (!is_lower_set(lower_set)) throw InvalidArgument("family " + lower_set.to_string() + " is not a lower set");
  if (lower_set.is_empty() || lower_set.is_full()) throw InvalidArgument("the empty and full lower sets have no facet");
  const int n = lower_set.n();
  const int i = lower_set.anchor();

  ShareLayout layout;
  for (SystemSet q : minimal_qualified_sets(lower_set)) {
    std::size_t first = layout.owner.size();
    for (int member : q.members()) layout.owner.push_back(member);
    layout.groups.emplace_back(first, layout.owner.size());
  }
  // Bit 0 is the secret; each group of size m draws m - 1 fresh bits.
  int bits = 1;
  for (auto [first, last] : layout.groups) bits += static_cast<int>(last - first) - 1;
  if (bits > 30) throw OutOfRange("witness distribution too large");

  // Share slots per system, in share order.
  std::vector<std::vector<std::size_t>> slots(n + 1);
  for (std::size_t share = 0; share < layout.owner.size(); ++share) slots[layout.owner[share]].push_back(share);
  std::vector<int> cardinalities(n + 1, 1);
  for (int s = 1; s <= n; ++s) cardinalities[s - 1] = 1 << slots[s].size();
  cardinalities[n] = 2;

  return from_uniform_bits(n + 1, cardinalities, bits, [&](std::uint64_t seed) {
    const int secret = static_cast<int>(seed & 1U);
    std::vector<int> share_value(layout.owner.size(), 0);
    int next_bit = 1;
    for (auto [first, last] : layout.groups) {
      int parity = secret;
      for (std::size_t share = first; share + 1 < last; ++share) {
        share_value[share] = static_cast<int>((seed >> next_bit++) & 1U);
        parity ^= share_value[share];
      }
      share_value[last - 1] = parity;
    }
    std::vector<int> outcome(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
      int packed = 0;
      for (std::size_t k = 0; k < slots[s].size(); ++k) packed |= share_value[slots[s][k]] << k;
      outcome[s - 1] = packed;
    }
    outcome[i - 1] = 0;
    outcome[n] = secret;
    return outcome;
  });
}

std::pair<JointDistribution, JointDistribution> balance_witness(int i, int n) {
  if (n < 1 || n > kMaxSystems - 1) throw OutOfRange("system count out of range");
  if (i < 1 || i > n) throw OutOfRange("system index out of range");
  auto build = [&](bool uniform_i) {
    std::vector<int> cardinalities(n, 2);
    if (!uniform_i) cardinalities[i - 1] = 1;
    return from_uniform_bits(n, cardinalities, n, [&](std::uint64_t seed) {
      std::vector<int> outcome(n);
      for (int s = 1; s <= n; ++s) outcome[s - 1] = static_cast<int>((seed >> (s - 1)) & 1U);
      if (!uniform_i) outcome[i - 1] = 0;
      return outcome;
    });
  };
  return {build(false), build(true)};
}

std::pair<EntropyVector, EntropyVector> merged_and_removed(const EntropyVector& witness_entropy, int i) {
  const int n = witness_entropy.n - 1;
  if (n < 1 || i < 1 || i > n) throw OutOfRange("witness entropy vector does not match system index");
  const std::uint32_t auxiliary = std::uint32_t{1} << n;
  std::vector<std::uint32_t> merged(std::size_t{1} << n), removed(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    removed[mask] = mask;
    merged[mask] = (mask >> (i - 1)) & 1U ? mask | auxiliary : mask;
  }
  return {restrict_to(witness_entropy, n, merged), restrict_to(witness_entropy, n, removed)};
}

bool verify_certificate(const ViolationCertificate& certificate) {
  const int n = certificate.target.n();
  const int i = certificate.system;
  if (i < 1 || i > n) return false;
  if (certificate.witness.variable_count() != static_cast<std::size_t>(n + 1)) return false;
  EntropyVector h;
  try {
    h = shannon_entropy_vector(certificate.witness);
  } catch (const Error&) {
    return false;
  }
  if (!h.exact) return false;
  auto [merged, removed] = merged_and_removed(h, i);
  const bool trace = certificate.operation == LocalOperation::TraceAuxiliary;
  const EntropyVector& before = trace ? merged : removed;
  const EntropyVector& after = trace ? removed : merged;
  if (before.values != certificate.before.values || after.values != certificate.after.values) return false;
  Rational f_before = evaluate(certificate.target, before).value;
  Rational f_after = evaluate(certificate.target, after).value;
  if (f_before != certificate.value_before || f_after != certificate.value_after) return false;
  if (!(f_after > f_before)) return false;

  // Appending is only a local operation if the auxiliary is fresh randomness.
  if (!trace) {
    SystemSet everything = SystemSet::full(n + 1);
    SystemSet auxiliary = SystemSet::of({n + 1}, n + 1);
    SystemSet rest = everything.without(n + 1);
    if (h[everything] != h[auxiliary] + h[rest]) return false;
  }
  Rational lifted = evaluate(lift_partial_trace(certificate.target, i), h).value;
  return trace ? sgn(lifted) < 0 : sgn(lifted) > 0;
}

namespace {

ViolationCertificate build_certificate(const Functional& alpha, const SystemVerdict& verdict) {
  const int n = alpha.n();
  const int i = verdict.system;
  ViolationCertificate certificate;
  certificate.target = alpha;
  certificate.system = i;
  if (verdict.violation == Violation::LowerSet) {
    certificate.lower_set = verdict.lower_set;
    certificate.witness = facet_witness_distribution(*verdict.lower_set);
    certificate.operation = LocalOperation::TraceAuxiliary;
  } else {
    // The auxiliary is X_i of the high balance witness; X_i itself stays constant.
    auto [low, high] = balance_witness(i, n);
    JointDistribution witness;
    for (int s = 1; s <= n + 1; ++s) witness.variables.push_back(s);
    witness.cardinalities = low.cardinalities;
    witness.cardinalities.push_back(2);
    for (const auto& atom : high.atoms) {
      std::vector<int> outcome = atom.outcome;
      outcome.push_back(outcome[i - 1]);
      outcome[i - 1] = 0;
      witness.atoms.push_back({outcome, atom.p});
    }
    certificate.witness = canonicalize(std::move(witness));
    certificate.operation = sgn(verdict.value) > 0 ? LocalOperation::AppendAuxiliary : LocalOperation::TraceAuxiliary;
  }
  EntropyVector h = shannon_entropy_vector(certificate.witness);
  auto [merged, removed] = merged_and_removed(h, i);
  const bool trace = certificate.operation == LocalOperation::TraceAuxiliary;
  certificate.before = trace ? merged : removed;
  certificate.after = trace ? removed : merged;
  certificate.value_before = evaluate(alpha, certificate.before).value;
  certificate.value_after = evaluate(alpha, certificate.after).value;
  if (!verify_certificate(certificate)) {
    throw InvariantBreach("violation certificate for system " + std::to_string(i) + " fails verification");
  }
  return certificate;
}

}  // namespace

std::optional<ViolationCertificate> violation_certificate(const Functional& alpha, const std::vector<int>& systems) {
  for (const auto& verdict : check_monotone(alpha, systems)) {
    if (!verdict.satisfied()) return build_certificate(alpha, verdict);
  }
  return std::nullopt;
}

std::vector<ViolationCertificate> violation_certificates(const Functional& alpha, const std::vector<int>& systems) {
  std::vector<ViolationCertificate> out;
  for (const auto& verdict : check_monotone(alpha, systems)) {
    if (!verdict.satisfied()) out.push_back(build_certificate(alpha, verdict));
  }
  return out;
}

}  // namespace monocone
