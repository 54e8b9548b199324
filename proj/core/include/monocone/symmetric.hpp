#pragma once

#include <vector>

#include "monocone/cone.hpp"
#include "monocone/functional.hpp"

namespace monocone {

// Permutation-invariant formula: a[k - 1] is the common coefficient of every
// k-element subset.
struct SymmetricVector {
  int n = 0;
  RationalVector a;

  friend bool operator==(const SymmetricVector&, const SymmetricVector&) = default;
};

Integer binomial(int n, int k);

// Facets of the symmetric monotonicity cone in (a_1, ..., a_n) coordinates:
// for 1 <= k <= n - 1 the row sum_{j <= k} C(n-1, j-1) a_j >= 0, and the k = n
// row as the single equality.
HRep symmetric_facets(int n);

// The n - 1 generators with a_l = 1/l, a_{l+1} = -1/(n-l), l = 1..n-1.
std::vector<SymmetricVector> symmetric_generator_values(int n);

// Same generators as a VRep (rays scaled to coprime integers, in l order).
VRep symmetric_generators(int n);

// alpha_I = a_{|I|} for every nonempty I.
Functional embed_symmetric(const SymmetricVector& s);

}  // namespace monocone
