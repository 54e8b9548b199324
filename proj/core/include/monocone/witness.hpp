#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monocone/entropy.hpp"
#include "monocone/functional.hpp"
#include "monocone/subset_lattice.hpp"

namespace monocone {

// Distribution over systems 1..n plus the auxiliary part i' (label n + 1) with
// H(i' | I) = 1 for I in L and 0 for I in P_i(N) \ L.
//
// X_i is constant and X_{i'} is a uniform secret bit. The other variables hold
// XOR shares of the secret for the access structure whose qualified sets are
// {J \ {i} : J not in L}: each minimal qualified set gets its own fresh
// sharing, one share per member. Throws InvalidArgument if L is not a lower
// set or is empty or full.
JointDistribution facet_witness_distribution(const LowerSetFamily& lower_set);

// (low, high): product distributions p(x_i) p(rest) with uniform independent
// bits on the other systems; X_i is constant in low and a uniform bit in high.
std::pair<JointDistribution, JointDistribution> balance_witness(int i, int n);

// How system i is processed to go from the "before" to the "after" state.
enum class LocalOperation {
  // System i holds (X_i, X_{i'}) before and X_i after.
  TraceAuxiliary,
  // System i holds X_i before and (X_i, X_{i'}) after, X_{i'} being fresh
  // randomness independent of everything else.
  AppendAuxiliary,
};

// Distribution whose local processing strictly increases f.
struct ViolationCertificate {
  Functional target;
  int system = 0;
  LocalOperation operation = LocalOperation::TraceAuxiliary;
  // Set when the witness comes from a violated lower-set facet.
  std::optional<LowerSetFamily> lower_set;
  // Over n + 1 variables; label n + 1 is the auxiliary i'.
  JointDistribution witness;
  EntropyVector before;
  EntropyVector after;
  Rational value_before;
  Rational value_after;
};

// Entropy vectors over systems 1..n of the witness with the auxiliary merged
// into system i (first) and removed (second).
std::pair<EntropyVector, EntropyVector> merged_and_removed(const EntropyVector& witness_entropy, int i);

// Recomputes everything from the raw distribution: the stored entropy vectors
// and values must match, f must strictly increase, and the lifted partial
// trace value must have the matching sign.
bool verify_certificate(const ViolationCertificate& certificate);

// First violated system in the given order, or nullopt if alpha is monotone
// for all of them. Throws InvariantBreach if a built certificate fails
// verification.
std::optional<ViolationCertificate> violation_certificate(const Functional& alpha, const std::vector<int>& systems);

// One certificate per violated system.
std::vector<ViolationCertificate> violation_certificates(const Functional& alpha, const std::vector<int>& systems);

}  // namespace monocone
