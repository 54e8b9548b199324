#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monocone/linalg.hpp"
#include "monocone/rational.hpp"

namespace monocone {

// Halfspace description {x : a . x >= 0 for each inequality, e . x = 0 for each equality}.
//
// Canonical row order is all inequalities followed by all equalities.
struct HRep {
  std::size_t dim = 0;
  RationalMatrix inequalities;
  RationalMatrix equalities;
  // System count when coordinates are subsets of {1..n}; 0 for plain coordinates.
  int n = 0;
  std::string name;

  // Throws DimensionMismatch / InvalidArgument on wrong row length or a zero row.
  void validate() const;
};

// Generator description {sum g_k r_k + sum l_j v_j : g >= 0}.
struct VRep {
  std::size_t dim = 0;
  RationalMatrix rays;
  RationalMatrix lineality;
  int n = 0;
  std::string name;

  void validate() const;
};

struct DDProgress {
  std::size_t inserted = 0;
  std::size_t total = 0;
  std::size_t rays = 0;
};

enum class AdjacencyTest {
  // No third ray's zero set contains the pair's common zero set.
  Combinatorial,
  // The rows tight at both rays have rank dim - 2.
  Algebraic,
};

enum class InsertionRule {
  // Rows in decreasing lexicographic order of their coefficient vectors.
  LexMax,
  // Ascending number of nonzero coefficients.
  Sparsity,
};

struct DDOptions {
  // Cap on the number of rays alive after any insertion step.
  std::size_t max_rays = 1'000'000;
  // Worker threads for the pairwise adjacency tests.
  unsigned jobs = 1;
  AdjacencyTest adjacency = AdjacencyTest::Combinatorial;
  // Ties are broken by row index.
  InsertionRule rule = InsertionRule::LexMax;
  // Explicit insertion order (indices into the inequality list); overrides rule.
  std::vector<std::size_t> insertion_order;
  std::function<void(const DDProgress&)> progress;
};

// Minimal generator description of an H-cone: extremal rays (coprime integer
// form, lexicographically sorted) and a lineality basis. For cones with
// lineality, the rays are taken in the orthogonal complement of the lineality
// space.
VRep dd_convert(const HRep& h, const DDOptions& options = {});

// Irredundant facet description of the cone generated by v.
HRep dual_convert(const VRep& v, const DDOptions& options = {});

enum class RowKind { Inequality, Equality };

struct MembershipVerdict {
  bool satisfied = true;
  RowKind kind = RowKind::Inequality;
  // Index within the inequality or equality list.
  std::size_t row_index = 0;
  RationalVector row;
  // row . x at the violated row.
  Rational value;
};

MembershipVerdict contains(const HRep& h, const RationalVector& x);

// True iff the equalities plus the inequalities tight at r have rank dim - 1.
// Throws InvalidArgument if r is zero or outside the cone.
bool is_extremal(const HRep& h, const RationalVector& r);

struct DDPairReport {
  bool passed = true;
  std::vector<std::string> problems;
};

// Checks that every generator satisfies h and that the generators of v are
// exactly the extremal rays (and lineality space) of h.
DDPairReport verify_dd_pair(const HRep& h, const VRep& v, const DDOptions& options = {});

// Concatenates constraint lists; with remove_redundant, the result is the
// irredundant description obtained from a DD round trip.
HRep intersect(const HRep& a, const HRep& b, bool remove_redundant = false, const DDOptions& options = {});

// Irredundant description of the same cone.
HRep remove_redundancy(const HRep& h, const DDOptions& options = {});

struct NonNegCombination {
  // Nonzero coefficients of rays, keyed by ray index; all >= 0.
  std::map<std::size_t, Rational> ray_coefficients;
  // One coefficient per lineality vector, any sign.
  RationalVector lineality_coefficients;
};

struct CombinationResult {
  std::optional<NonNegCombination> combination;
  // beta with beta . ray >= 0 for every ray, beta . lineality = 0, beta . target < 0.
  std::optional<RationalVector> separating;

  bool feasible() const { return combination.has_value(); }
};

// Exact phase-one simplex (Bland's rule) for target = sum g_k rays_k + lineality part, g >= 0.
CombinationResult solve_nonneg_combination(const VRep& v, const RationalVector& target);

// Reassembles sum g_k rays_k + sum l_j lineality_j.
RationalVector reconstruct(const VRep& v, const NonNegCombination& combination);

}  // namespace monocone
