#pragma once

#include <vector>

#include "monocone/functional.hpp"

namespace monocone {

// Lexicographically least coprime-integer form among all n! relabelings.
Functional canonical_representative(const Functional& alpha);

struct RayOrbit {
  Functional representative;
  // Indices into the input list, ascending.
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
};

// Partitions functionals into permutation orbits, ordered by representative.
std::vector<RayOrbit> group_orbits(const std::vector<Functional>& functionals);

}  // namespace monocone
