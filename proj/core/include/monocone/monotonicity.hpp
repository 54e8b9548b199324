#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monocone/cone.hpp"
#include "monocone/functional.hpp"
#include "monocone/subset_lattice.hpp"

namespace monocone {

// Facets of the cone of formulas monotone under processing of system i:
// one inequality sum_{I in L} alpha_I >= 0 per lower set L of P_i(N) other
// than the empty and the full one, in canonical lower-set order, plus the
// single balance equality sum_{I in P_i(N)} alpha_I = 0.
//
// The empty lower set gives 0 >= 0 and the full one is implied by the
// equality, so neither appears as an inequality row.
HRep single_system_facets(int i, int n);

// Lower sets indexing the inequality rows of single_system_facets(i, n).
const std::vector<LowerSetFamily>& facet_lower_sets(int i, int n);

// Intersection of single_system_facets(i, n) over i in systems, concatenated
// in increasing system order.
HRep monotonicity_cone(SystemSet systems);
HRep monotonicity_cone(const std::vector<int>& systems, int n);

// Identifies the ray e_{i ∪ I} - e_{i ∪ I ∪ {j}} of single_system_generators.
struct SsaTerm {
  int j = 0;
  SystemSet conditioning;  // I, with i not in I and j not in I

  friend bool operator<(const SsaTerm& a, const SsaTerm& b) {
    return std::pair(a.j, a.conditioning.mask()) < std::pair(b.j, b.conditioning.mask());
  }
  friend bool operator==(const SsaTerm& a, const SsaTerm& b) {
    return a.j == b.j && a.conditioning == b.conditioning;
  }
};

// Generator set R_i: rays e_{i ∪ I} - e_{i ∪ I ∪ {j}} (i ∈ I, j ∉ I) for every
// covering pair of P_i(N), lineality e_K for every nonempty K not containing i.
// terms[k] names rays[k].
struct SingleSystemGenerators {
  VRep generators;
  std::vector<SsaTerm> terms;
  std::vector<SystemSet> free_subsets;  // lineality[k] = e_{free_subsets[k]}
};

SingleSystemGenerators single_system_generators(int i, int n);

// Sum_{I ∋ i} alpha_I for every system i.
RationalVector balance_defect(const Functional& alpha);

enum class Violation { None, LowerSet, Balance };

struct SystemVerdict {
  int system = 0;
  Violation violation = Violation::None;
  // Offending lower set when violation == LowerSet.
  std::optional<LowerSetFamily> lower_set;
  // Lower-set sum (negative) or balance defect (nonzero) at the violation.
  Rational value;

  bool satisfied() const { return violation == Violation::None; }
};

// Per-system facet check. A violated lower-set inequality is reported in
// preference to a violated balance equality.
std::vector<SystemVerdict> check_monotone(const Functional& alpha, const std::vector<int>& systems);

bool is_monotone(const Functional& alpha, const std::vector<int>& systems);

// alpha = sum v_{j,I} (e_{i ∪ I} - e_{i ∪ I ∪ {j}}) + sum w_K e_K with v >= 0,
// i.e. f = -sum v_{j,I} S(j | i ∪ I) + sum w_K S(K).
struct DecompositionCertificate {
  int anchor = 0;
  int n = 0;
  std::map<SsaTerm, Rational> v;
  std::map<SystemSet, Rational> w;

  Functional reconstruct() const;
};

// Throws NotAMonotone naming the violated facet when alpha is not in M_i.
DecompositionCertificate decompose_monotone(const Functional& alpha, int i);

// Exact check of v >= 0, index validity, and the reconstruction identity.
bool verify_decomposition(const DecompositionCertificate& certificate, const Functional& alpha);

// Functional over n + 1 systems, system n + 1 playing the auxiliary part i':
// sum_{I ∋ i} alpha_I (e_{I ∪ {n+1}} - e_I). Its value on an entropy vector is
// f(before tracing out i') - f(after).
Functional lift_partial_trace(const Functional& alpha, int i);

struct RayEnumeration {
  VRep rays;
  std::vector<Functional> functionals;
};

// Extremal rays of M_N for 1 <= n <= 5.
RayEnumeration enumerate_monotone_rays(int n, const DDOptions& options = {});

}  // namespace monocone
