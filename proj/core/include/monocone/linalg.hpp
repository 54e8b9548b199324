#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monocone/rational.hpp"

namespace monocone {

using RationalMatrix = std::vector<RationalVector>;

struct RowEchelon {
  RationalMatrix rows;               // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon reduced_row_echelon(const RationalMatrix& rows, std::size_t cols);

std::size_t rank(const RationalMatrix& rows, std::size_t cols);

// Basis of {x : row . x = 0 for all rows}, one vector per free column of the
// reduced echelon form, each scaled to coprime integers.
RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t cols);

// Rank over Z/p for the prime p = 2^61 - 1. Never exceeds the rational rank;
// returns nullopt if some denominator is divisible by p.
std::optional<std::size_t> modular_rank_lower_bound(const RationalMatrix& rows, std::size_t cols);

// Exact inverse of a square matrix; throws InvalidArgument if singular.
RationalMatrix inverse(const RationalMatrix& square);

}  // namespace monocone
