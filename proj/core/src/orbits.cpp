#include "monocone/orbits.hpp"

#include <map>

namespace monocone {

Functional canonical_representative(const Functional& alpha) {
  const Functional base = alpha.normalized();
  Functional best = base;
  for (const auto& sigma : all_permutations(alpha.n())) {
    Functional image = permute_functional(base, sigma);
    if (image.coeffs() < best.coeffs()) best = std::move(image);
  }
  return best;
}

std::vector<RayOrbit> group_orbits(const std::vector<Functional>& functionals) {
  std::map<RationalVector, RayOrbit> by_representative;
  for (std::size_t k = 0; k < functionals.size(); ++k) {
    Functional rep = canonical_representative(functionals[k]);
    auto [it, inserted] = by_representative.try_emplace(rep.coeffs(), RayOrbit{rep, {}});
    it->second.members.push_back(k);
  }
  std::vector<RayOrbit> out;
  out.reserve(by_representative.size());
  for (auto& [key, orbit] : by_representative) out.push_back(std::move(orbit));
  return out;
}

}  // namespace monocone
