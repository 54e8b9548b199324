#include <algorithm>

#include "monocone/cone.hpp"
#include "monocone/error.hpp"

namespace monocone {

namespace {

void validate_rows(const RationalMatrix& rows, std::size_t dim, const char* what, bool allow_zero) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim) {
      throw DimensionMismatch(std::string(what) + " row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " + std::to_string(dim));
    }
    if (!allow_zero && is_zero(rows[r])) throw InvalidArgument(std::string(what) + " row " + std::to_string(r) + " is zero");
  }
}

// Component of x orthogonal to span(basis); basis rows must be independent.
RationalVector project_out(const RationalVector& x, const RationalMatrix& basis) {
  if (basis.empty()) return x;
  const std::size_t m = basis.size();
  RationalMatrix gram(m, RationalVector(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) gram[a][b] = dot(basis[a], basis[b]);
  }
  RationalMatrix gram_inv = inverse(gram);
  RationalVector rhs(m);
  for (std::size_t a = 0; a < m; ++a) rhs[a] = dot(basis[a], x);
  RationalVector out = x;
  for (std::size_t a = 0; a < m; ++a) {
    Rational coefficient = 0;
    for (std::size_t b = 0; b < m; ++b) coefficient += gram_inv[a][b] * rhs[b];
    if (sgn(coefficient) == 0) continue;
    for (std::size_t t = 0; t < x.size(); ++t) out[t] -= coefficient * basis[a][t];
  }
  return out;
}

}  // namespace

void HRep::validate() const {
  validate_rows(inequalities, dim, "inequality", false);
  validate_rows(equalities, dim, "equality", false);
}

void VRep::validate() const {
  validate_rows(rays, dim, "ray", false);
  validate_rows(lineality, dim, "lineality", false);
}

MembershipVerdict contains(const HRep& h, const RationalVector& x) {
  if (x.size() != h.dim) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + ", cone has " + std::to_string(h.dim));
  }
  for (std::size_t r = 0; r < h.inequalities.size(); ++r) {
    Rational value = dot(h.inequalities[r], x);
    if (sgn(value) < 0) return {false, RowKind::Inequality, r, h.inequalities[r], value};
  }
  for (std::size_t r = 0; r < h.equalities.size(); ++r) {
    Rational value = dot(h.equalities[r], x);
    if (sgn(value) != 0) return {false, RowKind::Equality, r, h.equalities[r], value};
  }
  return {};
}

bool is_extremal(const HRep& h, const RationalVector& r) {
  h.validate();
  if (r.size() != h.dim) throw DimensionMismatch("ray dimension does not match the cone");
  if (is_zero(r)) throw InvalidArgument("the zero vector is not a ray");
  if (!contains(h, r).satisfied) throw InvalidArgument("vector " + format_vector(r) + " is not in the cone");
  RationalMatrix tight = h.equalities;
  for (const auto& row : h.inequalities) {
    if (sgn(dot(row, r)) == 0) tight.push_back(row);
  }
  // r is a nonzero kernel vector of the tight rows, so their rank is at most dim - 1.
  auto bound = modular_rank_lower_bound(tight, h.dim);
  if (bound && *bound + 1 == h.dim) return true;
  return rank(tight, h.dim) + 1 == h.dim;
}

DDPairReport verify_dd_pair(const HRep& h, const VRep& v, const DDOptions& options) {
  h.validate();
  v.validate();
  if (h.dim != v.dim) throw DimensionMismatch("H- and V-representations have different dimensions");
  DDPairReport report;
  auto fail = [&](std::string message) {
    report.passed = false;
    report.problems.push_back(std::move(message));
  };

  for (std::size_t k = 0; k < v.rays.size(); ++k) {
    auto verdict = contains(h, v.rays[k]);
    if (!verdict.satisfied) fail("generator " + std::to_string(k) + " " + format_vector(v.rays[k]) + " violates " +
                                 (verdict.kind == RowKind::Equality ? "equality " : "inequality ") +
                                 std::to_string(verdict.row_index));
  }
  for (std::size_t k = 0; k < v.lineality.size(); ++k) {
    RationalVector negated = v.lineality[k];
    for (auto& x : negated) x = -x;
    if (!contains(h, v.lineality[k]).satisfied || !contains(h, negated).satisfied) {
      fail("lineality vector " + std::to_string(k) + " " + format_vector(v.lineality[k]) + " leaves the cone");
    }
  }

  VRep expected = dd_convert(h, options);
  const std::size_t lin_dim = expected.lineality.size();
  RationalMatrix both = expected.lineality;
  both.insert(both.end(), v.lineality.begin(), v.lineality.end());
  if (rank(v.lineality, v.dim) != v.lineality.size()) fail("lineality vectors are linearly dependent");
  if (rank(v.lineality, v.dim) != lin_dim || rank(both, v.dim) != lin_dim) {
    fail("lineality space has dimension " + std::to_string(rank(v.lineality, v.dim)) + ", expected " +
         std::to_string(lin_dim));
    return report;
  }

  RationalMatrix given;
  for (std::size_t k = 0; k < v.rays.size(); ++k) {
    RationalVector reduced = project_out(v.rays[k], expected.lineality);
    if (is_zero(reduced)) {
      fail("generator " + std::to_string(k) + " " + format_vector(v.rays[k]) + " lies in the lineality space");
      continue;
    }
    reduced = normalize_positive(reduced);
    if (std::find(given.begin(), given.end(), reduced) != given.end()) {
      fail("generator " + std::to_string(k) + " " + format_vector(v.rays[k]) + " duplicates another generator");
      continue;
    }
    if (!std::binary_search(expected.rays.begin(), expected.rays.end(), reduced)) {
      fail("generator " + std::to_string(k) + " " + format_vector(v.rays[k]) + " is not an extremal ray");
    }
    given.push_back(std::move(reduced));
  }
  std::sort(given.begin(), given.end());
  for (const auto& ray : expected.rays) {
    if (!std::binary_search(given.begin(), given.end(), ray)) fail("missing generator " + format_vector(ray));
  }
  return report;
}

HRep remove_redundancy(const HRep& h, const DDOptions& options) {
  HRep out = dual_convert(dd_convert(h, options), options);
  out.name = h.name;
  return out;
}

HRep intersect(const HRep& a, const HRep& b, bool remove_redundant, const DDOptions& options) {
  if (a.dim != b.dim || a.n != b.n) throw DimensionMismatch("intersecting cones of different dimensions");
  HRep out = a;
  out.inequalities.insert(out.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  out.equalities.insert(out.equalities.end(), b.equalities.begin(), b.equalities.end());
  if (!a.name.empty() || !b.name.empty()) out.name = a.name + " & " + b.name;
  if (remove_redundant) {
    std::string name = out.name;
    out = remove_redundancy(out, options);
    out.name = name;
  }
  return out;
}

RationalVector reconstruct(const VRep& v, const NonNegCombination& combination) {
  RationalVector out(v.dim, Rational(0));
  for (const auto& [index, coefficient] : combination.ray_coefficients) {
    for (std::size_t t = 0; t < v.dim; ++t) out[t] += coefficient * v.rays.at(index)[t];
  }
  for (std::size_t j = 0; j < combination.lineality_coefficients.size(); ++j) {
    for (std::size_t t = 0; t < v.dim; ++t) out[t] += combination.lineality_coefficients[j] * v.lineality.at(j)[t];
  }
  return out;
}

}  // namespace monocone
