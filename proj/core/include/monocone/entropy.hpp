#pragma once

#include <vector>

#include "monocone/functional.hpp"

namespace monocone {

struct Atom {
  std::vector<int> outcome;
  Rational p;
};

// Finite joint distribution of labelled discrete variables.
//
// Variable labels must be a permutation of 1..m; the variable labelled s is
// system s of the entropy vector. Outcomes are integers in [0, cardinality).
struct JointDistribution {
  std::vector<int> variables;
  std::vector<int> cardinalities;
  std::vector<Atom> atoms;

  std::size_t variable_count() const { return variables.size(); }

  // Throws InvalidArgument unless probabilities are positive and sum to one,
  // outcomes fit their cardinalities, and no outcome repeats.
  void validate() const;
};

// Merges repeated outcomes and drops zero-probability atoms; atoms end up
// sorted by outcome.
JointDistribution canonicalize(JointDistribution d);

// Shannon entropies in bits, one per nonempty subset of the systems.
//
// A term p log2(1/p) is exact when p is a power of 1/2. Otherwise it is
// rounded to `precision_bits` fractional bits and `exact` is false.
struct EntropyVector {
  int n = 0;
  RationalVector values;
  bool exact = true;
  int precision_bits = 64;

  const Rational& operator[](SystemSet s) const { return values.at(s.coordinate()); }
};

inline constexpr int kDefaultEntropyPrecision = 64;

EntropyVector shannon_entropy_vector(const JointDistribution& d, int precision_bits = kDefaultEntropyPrecision);

// Conditional entropy H(target | given) = H(target ∪ given) - H(given), with H(∅) = 0.
Rational conditional_entropy(const EntropyVector& h, SystemSet target, SystemSet given);

struct Evaluation {
  Rational value;
  bool exact = true;
};

// alpha . h; exact whenever h is.
Evaluation evaluate(const Functional& alpha, const EntropyVector& h);

}  // namespace monocone
