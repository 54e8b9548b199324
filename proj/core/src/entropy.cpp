#include "monocone/entropy.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <optional>

#include "monocone/error.hpp"

namespace monocone {

namespace {

// k with p == 2^-k, if any.
std::optional<unsigned long> dyadic_exponent(const Rational& p) {
  if (p.get_num() != 1) return std::nullopt;
  const mpz_srcptr den = p.get_den_mpz_t();
  unsigned long k = mpz_scan1(den, 0);
  if (mpz_sizeinbase(den, 2) != k + 1) return std::nullopt;
  return k;
}

// p log2(1/p) rounded to precision_bits fractional bits.
Rational approximate_term(const Rational& p, int precision_bits) {
  const mpfr_prec_t working = precision_bits + 64;
  mpfr_t x, logx;
  mpfr_init2(x, working);
  mpfr_init2(logx, working);
  mpfr_set_q(x, p.get_mpq_t(), MPFR_RNDN);
  mpfr_log2(logx, x, MPFR_RNDN);
  mpfr_mul(x, x, logx, MPFR_RNDN);
  mpfr_neg(x, x, MPFR_RNDN);
  mpfr_mul_2si(x, x, precision_bits, MPFR_RNDN);
  mpfr_rint(x, x, MPFR_RNDN);
  Integer scaled;
  mpfr_get_z(scaled.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_clear(logx);
  Integer denominator = 1;
  denominator <<= precision_bits;
  Rational out(scaled, denominator);
  out.canonicalize();
  return out;
}

}  // namespace

void JointDistribution::validate() const {
  const std::size_t m = variables.size();
  if (m == 0 || m > static_cast<std::size_t>(kMaxSystems)) throw InvalidArgument("distribution needs 1..16 variables");
  if (cardinalities.size() != m) throw InvalidArgument("one cardinality per variable is required");
  std::vector<int> sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < m; ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) throw InvalidArgument("variable labels must be a permutation of 1..m");
    if (cardinalities[k] < 1) throw InvalidArgument("cardinalities must be positive");
  }
  if (atoms.empty()) throw InvalidArgument("distribution has no atoms");
  Rational total = 0;
  std::vector<std::vector<int>> outcomes;
  for (const auto& atom : atoms) {
    if (atom.outcome.size() != m) throw InvalidArgument("outcome length differs from the variable count");
    for (std::size_t k = 0; k < m; ++k) {
      if (atom.outcome[k] < 0 || atom.outcome[k] >= cardinalities[k]) throw InvalidArgument("outcome outside its cardinality");
    }
    if (sgn(atom.p) <= 0) throw InvalidArgument("atom probabilities must be positive");
    total += atom.p;
    outcomes.push_back(atom.outcome);
  }
  if (total != 1) throw InvalidArgument("probabilities sum to " + to_string(total) + ", not 1");
  std::sort(outcomes.begin(), outcomes.end());
  if (std::adjacent_find(outcomes.begin(), outcomes.end()) != outcomes.end()) throw InvalidArgument("duplicate outcome");
}

JointDistribution canonicalize(JointDistribution d) {
  std::map<std::vector<int>, Rational> merged;
  for (auto& atom : d.atoms) merged[atom.outcome] += atom.p;
  d.atoms.clear();
  for (auto& [outcome, p] : merged) {
    if (sgn(p) != 0) d.atoms.push_back({outcome, p});
  }
  return d;
}

EntropyVector shannon_entropy_vector(const JointDistribution& d, int precision_bits) {
  d.validate();
  if (precision_bits < 1) throw InvalidArgument("precision must be at least one bit");
  const int n = static_cast<int>(d.variable_count());
  // position[s - 1] = index of the variable labelled s within an outcome tuple.
  std::vector<std::size_t> position(n);
  for (int k = 0; k < n; ++k) position[d.variables[k] - 1] = static_cast<std::size_t>(k);

  EntropyVector h;
  h.n = n;
  h.precision_bits = precision_bits;
  h.values.assign(coordinate_count(n), Rational(0));
  std::vector<int> key;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::map<std::vector<int>, Rational> marginal;
    for (const auto& atom : d.atoms) {
      key.clear();
      for (int s = 1; s <= n; ++s) {
        if ((mask >> (s - 1)) & 1U) key.push_back(atom.outcome[position[s - 1]]);
      }
      marginal[key] += atom.p;
    }
    Rational entropy = 0;
    for (const auto& [outcome, p] : marginal) {
      if (auto k = dyadic_exponent(p)) {
        entropy += Rational(Integer(*k)) * p;
      } else {
        entropy += approximate_term(p, precision_bits);
        h.exact = false;
      }
    }
    h.values[mask - 1] = entropy;
  }
  return h;
}

Rational conditional_entropy(const EntropyVector& h, SystemSet target, SystemSet given) {
  SystemSet joint = target | given;
  Rational out = joint.empty() ? Rational(0) : h[joint];
  if (!given.empty()) out -= h[given];
  return out;
}

Evaluation evaluate(const Functional& alpha, const EntropyVector& h) {
  if (alpha.n() != h.n) {
    throw DimensionMismatch("functional over " + std::to_string(alpha.n()) + " systems, entropy vector over " +
                            std::to_string(h.n));
  }
  return {dot(alpha.coeffs(), h.values), h.exact};
}

}  // namespace monocone
