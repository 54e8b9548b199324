#include "monocone/linalg.hpp"

#include "monocone/error.hpp"

namespace monocone {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1U) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1U;
  }
  return result;
}

std::optional<std::uint64_t> reduce(const Rational& q) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

}  // namespace

RowEchelon reduced_row_echelon(const RationalMatrix& rows, std::size_t cols) {
  RationalMatrix work;
  work.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("matrix row has wrong length");
    if (!is_zero(row)) work.push_back(row);
  }
  RowEchelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < work.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < work.size() && sgn(work[pivot][col]) == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[next], work[pivot]);
    Rational scale = 1 / work[next][col];
    for (auto& x : work[next]) x *= scale;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next || sgn(work[r][col]) == 0) continue;
      Rational factor = work[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (sgn(work[next][c]) != 0) work[r][c] -= factor * work[next][c];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  work.resize(next);
  out.rows = std::move(work);
  return out;
}

std::size_t rank(const RationalMatrix& rows, std::size_t cols) { return reduced_row_echelon(rows, cols).pivots.size(); }

RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t cols) {
  RowEchelon echelon = reduced_row_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : echelon.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.rows.size(); ++r) v[echelon.pivots[r]] = -echelon.rows[r][free];
    basis.push_back(normalize_positive(v));
  }
  return basis;
}

std::optional<std::size_t> modular_rank_lower_bound(const RationalMatrix& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> basis;  // echelon rows, leading entry 1
  std::vector<std::size_t> lead;
  std::vector<std::uint64_t> row(cols);
  for (const auto& source : rows) {
    if (source.size() != cols) throw DimensionMismatch("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      auto value = reduce(source[c]);
      if (!value) return std::nullopt;
      row[c] = *value;
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t factor = row[lead[b]];
      if (factor == 0) continue;
      for (std::size_t c = lead[b]; c < cols; ++c) {
        row[c] = (row[c] + kPrime - mul_mod(factor, basis[b][c])) % kPrime;
      }
    }
    std::size_t first = 0;
    while (first < cols && row[first] == 0) ++first;
    if (first == cols) continue;
    std::uint64_t inv = pow_mod(row[first], kPrime - 2);
    for (std::size_t c = first; c < cols; ++c) row[c] = mul_mod(row[c], inv);
    // Keep the basis fully reduced so later rows only need one pass.
    for (auto& other : basis) {
      std::uint64_t factor = other[first];
      if (factor == 0) continue;
      for (std::size_t c = first; c < cols; ++c) other[c] = (other[c] + kPrime - mul_mod(factor, row[c])) % kPrime;
    }
    basis.push_back(row);
    lead.push_back(first);
    if (basis.size() == cols) break;
  }
  return basis.size();
}

RationalMatrix inverse(const RationalMatrix& square) {
  const std::size_t n = square.size();
  RationalMatrix augmented;
  augmented.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (square[r].size() != n) throw DimensionMismatch("inverse: matrix is not square");
    RationalVector row = square[r];
    row.resize(2 * n, Rational(0));
    row[n + r] = 1;
    augmented.push_back(std::move(row));
  }
  RowEchelon echelon = reduced_row_echelon(augmented, 2 * n);
  if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1) throw InvalidArgument("inverse: singular matrix");
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[r][c] = echelon.rows[r][n + c];
  }
  return out;
}

}  // namespace monocone
