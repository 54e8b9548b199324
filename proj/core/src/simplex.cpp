// Phase-one simplex over the rationals. Columns are the rays followed by each
// lineality vector with both signs; one artificial variable per coordinate.

#include "monocone/cone.hpp"
#include "monocone/error.hpp"

namespace monocone {

CombinationResult solve_nonneg_combination(const VRep& v, const RationalVector& target) {
  v.validate();
  if (target.size() != v.dim) throw DimensionMismatch("target dimension does not match the generators");
  const std::size_t d = v.dim;
  const std::size_t n_rays = v.rays.size();
  const std::size_t n_lin = v.lineality.size();
  const std::size_t structural = n_rays + 2 * n_lin;
  const std::size_t cols = structural + d;  // plus the right-hand side at index cols

  auto column_entry = [&](std::size_t j, std::size_t row) -> Rational {
    if (j < n_rays) return v.rays[j][row];
    std::size_t l = (j - n_rays) / 2;
    return (j - n_rays) % 2 == 0 ? v.lineality[l][row] : Rational(-v.lineality[l][row]);
  };

  // Rows are sign-flipped so the right-hand side is nonnegative.
  std::vector<int> flip(d, 1);
  RationalMatrix tableau(d, RationalVector(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(target[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < structural; ++j) tableau[i][j] = flip[i] * column_entry(j, i);
    tableau[i][structural + i] = 1;
    tableau[i][cols] = flip[i] * target[i];
  }
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = structural + i;

  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector cost(cols + 1, Rational(0));
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= structural && j < cols) continue;
    for (std::size_t i = 0; i < d; ++i) cost[j] -= tableau[i][j];
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(cost[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;
    std::size_t leaving = d;
    Rational best_ratio;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(tableau[i][entering]) <= 0) continue;
      Rational ratio = tableau[i][cols] / tableau[i][entering];
      if (leaving == d || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == d) throw InvariantBreach("phase-one simplex is unbounded");
    Rational pivot = tableau[leaving][entering];
    for (auto& x : tableau[leaving]) x /= pivot;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leaving || sgn(tableau[i][entering]) == 0) continue;
      Rational factor = tableau[i][entering];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(tableau[leaving][j]) != 0) tableau[i][j] -= factor * tableau[leaving][j];
      }
    }
    Rational factor = cost[entering];
    for (std::size_t j = 0; j <= cols; ++j) {
      if (sgn(tableau[leaving][j]) != 0) cost[j] -= factor * tableau[leaving][j];
    }
    basis[leaving] = entering;
  }

  CombinationResult result;
  const Rational objective = -cost[cols];
  if (sgn(objective) > 0) {
    // Simplex multipliers y_i = 1 - reduced cost of artificial i; beta = -D y.
    RationalVector beta(d);
    for (std::size_t i = 0; i < d; ++i) beta[i] = -flip[i] * (1 - cost[structural + i]);
    for (const auto& ray : v.rays) {
      if (sgn(dot(beta, ray)) < 0) throw InvariantBreach("Farkas witness fails on a ray");
    }
    for (const auto& line : v.lineality) {
      if (sgn(dot(beta, line)) != 0) throw InvariantBreach("Farkas witness is not orthogonal to the lineality space");
    }
    if (sgn(dot(beta, target)) >= 0) throw InvariantBreach("Farkas witness does not separate the target");
    result.separating = std::move(beta);
    return result;
  }

  RationalVector x(structural, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i] < structural) x[basis[i]] = tableau[i][cols];
  }
  NonNegCombination combination;
  for (std::size_t j = 0; j < n_rays; ++j) {
    if (sgn(x[j]) != 0) combination.ray_coefficients.emplace(j, x[j]);
  }
  combination.lineality_coefficients.resize(n_lin);
  for (std::size_t l = 0; l < n_lin; ++l) combination.lineality_coefficients[l] = x[n_rays + 2 * l] - x[n_rays + 2 * l + 1];
  if (reconstruct(v, combination) != target) throw InvariantBreach("simplex solution does not reconstruct the target");
  result.combination = std::move(combination);
  return result;
}

}  // namespace monocone
