#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocone/functional.hpp"

namespace monocone {

// I(i;j) = S(i) + S(j) - S(ij).
Functional mutual_information(int i, int j, int n);

// I(i;j|K) = S(iK) + S(jK) - S(K) - S(ijK), with S(∅) = 0.
Functional conditional_mutual_information(int i, int j, SystemSet conditioning, int n);

// I(A;B|K) for disjoint sets A, B (nonempty) and K.
Functional conditional_mutual_information(SystemSet a, SystemSet b, SystemSet conditioning);

// S(j | K) = S(jK) - S(K).
Functional conditional_entropy(int j, SystemSet conditioning, int n);

// J(1;2;3) = S(12) + S(23) + S(13) - 2 S(123), the dual total correlation.
Functional dual_total_correlation3();

// U(1;2;3;4) = S(12) + S(34) + S(13) - S(123) - S(134).
Functional u_monotone4();

// 2 I(1;2|3) + I(1;3|2) + I(2;3|1) + I(1;2|4) + I(3;4) - I(1;2).
Functional zhang_yeung4();

struct CatalogEntry {
  std::string name;
  int min_n = 0;
  std::string description;
  // The formula over min_n systems.
  Functional functional;
};

std::vector<CatalogEntry> catalog_entries();

// Entry by CLI name, extended to n systems (n = 0 keeps min_n). Throws
// InvalidArgument for unknown names or n below the entry's minimum.
Functional catalog_functional(const std::string& name, int n = 0);

// Name of the catalog entry whose permutation orbit contains a positive
// multiple of alpha, if any.
std::optional<std::string> identify(const Functional& alpha);

}  // namespace monocone
