#include "monocone/monotonicity.hpp"

#include <array>
#include <mutex>

#include "monocone/error.hpp"

namespace monocone {

namespace {

void check_args(int i, int n) {
  if (n < 1 || n > kMaxLowerSetSystems) {
    throw OutOfRange("system count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxLowerSetSystems));
  }
  if (i < 1 || i > n) throw OutOfRange("system index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

RationalVector indicator(const std::vector<SystemSet>& members, int n) {
  RationalVector row(coordinate_count(n), Rational(0));
  for (SystemSet s : members) row[s.coordinate()] = 1;
  return row;
}

}  // namespace

const std::vector<LowerSetFamily>& facet_lower_sets(int i, int n) {
  check_args(i, n);
  static std::mutex mutex;
  static std::array<std::array<std::optional<std::vector<LowerSetFamily>>, kMaxLowerSetSystems + 1>,
                    kMaxLowerSetSystems + 1>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n][i];
  if (!slot) {
    std::vector<LowerSetFamily> nontrivial;
    for (const auto& family : enumerate_lower_sets(i, n)) {
      if (!family.is_empty() && !family.is_full()) nontrivial.push_back(family);
    }
    slot = std::move(nontrivial);
  }
  return *slot;
}

HRep single_system_facets(int i, int n) {
  check_args(i, n);
  HRep h;
  h.dim = coordinate_count(n);
  h.n = n;
  h.name = "M_" + std::to_string(i) + " n=" + std::to_string(n);
  for (const auto& family : facet_lower_sets(i, n)) h.inequalities.push_back(indicator(family.members(), n));
  h.equalities.push_back(indicator(subsets_containing(i, n), n));
  return h;
}

HRep monotonicity_cone(SystemSet systems) {
  if (systems.empty()) throw InvalidArgument("monotonicity cone needs at least one system");
  const int n = systems.n();
  HRep h;
  h.dim = coordinate_count(n);
  h.n = n;
  h.name = "M_" + systems.to_string() + " n=" + std::to_string(n);
  for (int i : systems.members()) {
    HRep single = single_system_facets(i, n);
    h.inequalities.insert(h.inequalities.end(), single.inequalities.begin(), single.inequalities.end());
    h.equalities.insert(h.equalities.end(), single.equalities.begin(), single.equalities.end());
  }
  return h;
}

HRep monotonicity_cone(const std::vector<int>& systems, int n) {
  if (n < 1 || n > kMaxLowerSetSystems) throw OutOfRange("system count " + std::to_string(n) + " out of range");
  return monotonicity_cone(SystemSet::from_members(systems, n));
}

SingleSystemGenerators single_system_generators(int i, int n) {
  check_args(i, n);
  SingleSystemGenerators out;
  VRep& v = out.generators;
  v.dim = coordinate_count(n);
  v.n = n;
  v.name = "R_" + std::to_string(i) + " n=" + std::to_string(n);
  for (SystemSet lower : subsets_containing(i, n)) {
    for (int j = 1; j <= n; ++j) {
      if (lower.contains(j)) continue;
      RationalVector ray(v.dim, Rational(0));
      ray[lower.coordinate()] = 1;
      ray[lower.with(j).coordinate()] = -1;
      v.rays.push_back(std::move(ray));
      out.terms.push_back({j, lower.without(i)});
    }
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    SystemSet k(mask, n);
    if (k.contains(i)) continue;
    v.lineality.push_back(Functional::unit(k).coeffs());
    out.free_subsets.push_back(k);
  }
  return out;
}

RationalVector balance_defect(const Functional& alpha) {
  const int n = alpha.n();
  RationalVector defect(n, Rational(0));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const Rational& c = alpha.coeffs()[mask - 1];
    if (sgn(c) == 0) continue;
    for (int i = 1; i <= n; ++i) {
      if ((mask >> (i - 1)) & 1U) defect[i - 1] += c;
    }
  }
  return defect;
}

std::vector<SystemVerdict> check_monotone(const Functional& alpha, const std::vector<int>& systems) {
  const int n = alpha.n();
  std::vector<SystemVerdict> out;
  RationalVector defect = balance_defect(alpha);
  for (int i : systems) {
    check_args(i, n);
    SystemVerdict verdict;
    verdict.system = i;
    for (const auto& family : facet_lower_sets(i, n)) {
      Rational sum = 0;
      for (SystemSet s : family.members()) sum += alpha[s];
      if (sgn(sum) < 0) {
        verdict.violation = Violation::LowerSet;
        verdict.lower_set = family;
        verdict.value = sum;
        break;
      }
    }
    if (verdict.satisfied() && sgn(defect[i - 1]) != 0) {
      verdict.violation = Violation::Balance;
      verdict.value = defect[i - 1];
    }
    out.push_back(std::move(verdict));
  }
  return out;
}

bool is_monotone(const Functional& alpha, const std::vector<int>& systems) {
  for (const auto& verdict : check_monotone(alpha, systems)) {
    if (!verdict.satisfied()) return false;
  }
  return true;
}

Functional DecompositionCertificate::reconstruct() const {
  Functional out(n);
  for (const auto& [term, coefficient] : v) {
    SystemSet lower = term.conditioning.with(anchor);
    out[lower] += coefficient;
    out[lower.with(term.j)] -= coefficient;
  }
  for (const auto& [subset, coefficient] : w) out[subset] += coefficient;
  return out;
}

DecompositionCertificate decompose_monotone(const Functional& alpha, int i) {
  check_args(i, alpha.n());
  auto verdict = check_monotone(alpha, {i}).front();
  if (!verdict.satisfied()) {
    std::string what = verdict.violation == Violation::Balance
                           ? "balance equality for system " + std::to_string(i)
                           : "lower set " + verdict.lower_set->to_string();
    throw NotAMonotone("formula is not monotone under processing of system " + std::to_string(i) + ": violates " + what,
                       what);
  }
  SingleSystemGenerators generators = single_system_generators(i, alpha.n());
  CombinationResult solved = solve_nonneg_combination(generators.generators, alpha.coeffs());
  if (!solved.feasible()) {
    throw InvariantBreach("formula satisfies every facet of M_" + std::to_string(i) + " but has no decomposition");
  }
  DecompositionCertificate certificate;
  certificate.anchor = i;
  certificate.n = alpha.n();
  for (const auto& [index, coefficient] : solved.combination->ray_coefficients) {
    certificate.v.emplace(generators.terms[index], coefficient);
  }
  const auto& lineality = solved.combination->lineality_coefficients;
  for (std::size_t k = 0; k < lineality.size(); ++k) {
    if (sgn(lineality[k]) != 0) certificate.w.emplace(generators.free_subsets[k], lineality[k]);
  }
  if (!verify_decomposition(certificate, alpha)) throw InvariantBreach("decomposition fails its own verification");
  return certificate;
}

bool verify_decomposition(const DecompositionCertificate& certificate, const Functional& alpha) {
  const int i = certificate.anchor;
  if (certificate.n != alpha.n() || i < 1 || i > certificate.n) return false;
  for (const auto& [term, coefficient] : certificate.v) {
    if (sgn(coefficient) < 0) return false;
    if (term.j < 1 || term.j > certificate.n || term.j == i) return false;
    if (term.conditioning.n() != certificate.n) return false;
    if (term.conditioning.contains(i) || term.conditioning.contains(term.j)) return false;
  }
  for (const auto& [subset, coefficient] : certificate.w) {
    if (subset.n() != certificate.n || subset.empty() || subset.contains(i)) return false;
  }
  return certificate.reconstruct() == alpha;
}

Functional lift_partial_trace(const Functional& alpha, int i) {
  const int n = alpha.n();
  if (i < 1 || i > n) throw OutOfRange("system index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  if (n + 1 > kMaxSystems) throw OutOfRange("lifted functional exceeds the system bound");
  Functional lifted(n + 1);
  const std::uint32_t auxiliary = std::uint32_t{1} << n;
  for (SystemSet s : subsets_containing(i, n)) {
    const Rational& c = alpha[s];
    if (sgn(c) == 0) continue;
    lifted[SystemSet(s.mask() | auxiliary, n + 1)] += c;
    lifted[SystemSet(s.mask(), n + 1)] -= c;
  }
  return lifted;
}

RayEnumeration enumerate_monotone_rays(int n, const DDOptions& options) {
  if (n < 1 || n > 5) throw OutOfRange("ray enumeration supports 1 <= n <= 5, got " + std::to_string(n));
  RayEnumeration out;
  out.rays = dd_convert(monotonicity_cone(SystemSet::full(n)), options);
  if (!out.rays.lineality.empty()) throw InvariantBreach("monotonicity cone is not pointed");
  for (const auto& ray : out.rays.rays) out.functionals.emplace_back(n, ray);
  return out;
}

}  // namespace monocone
