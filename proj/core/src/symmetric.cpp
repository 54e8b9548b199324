#include "monocone/symmetric.hpp"

#include "monocone/error.hpp"

namespace monocone {

namespace {

void check_n(int n) {
  if (n < 2) throw OutOfRange("symmetric cone needs n >= 2, got " + std::to_string(n));
}

}  // namespace

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

HRep symmetric_facets(int n) {
  check_n(n);
  HRep h;
  h.dim = static_cast<std::size_t>(n);
  h.name = "symmetric facets n=" + std::to_string(n);
  for (int k = 1; k <= n; ++k) {
    RationalVector row(n, Rational(0));
    for (int j = 1; j <= k; ++j) row[j - 1] = Rational(binomial(n - 1, j - 1));
    (k < n ? h.inequalities : h.equalities).push_back(std::move(row));
  }
  return h;
}

std::vector<SymmetricVector> symmetric_generator_values(int n) {
  check_n(n);
  std::vector<SymmetricVector> out;
  for (int l = 1; l <= n - 1; ++l) {
    SymmetricVector s{n, RationalVector(n, Rational(0))};
    s.a[l - 1] = Rational(1, l);
    s.a[l] = Rational(-1, n - l);
    out.push_back(std::move(s));
  }
  return out;
}

VRep symmetric_generators(int n) {
  VRep v;
  v.dim = static_cast<std::size_t>(n);
  v.name = "symmetric generators n=" + std::to_string(n);
  for (const auto& s : symmetric_generator_values(n)) v.rays.push_back(normalize_positive(s.a));
  return v;
}

Functional embed_symmetric(const SymmetricVector& s) {
  if (s.a.size() != static_cast<std::size_t>(s.n)) throw DimensionMismatch("symmetric vector length differs from n");
  Functional out(s.n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s.n); ++mask) {
    SystemSet subset(mask, s.n);
    out[subset] = s.a[subset.size() - 1];
  }
  return out;
}

}  // namespace monocone
