#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monocone {

// Exact rational number. mpq_class keeps values canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs);

bool is_zero(std::span<const Rational> v);

// Scales v by the unique positive rational that makes its entries coprime
// integers. The zero vector is returned unchanged.
RationalVector normalize_positive(std::span<const Rational> v);

// True iff a == c * b for some rational c > 0.
bool positive_multiple(std::span<const Rational> a, std::span<const Rational> b);

std::string format_vector(std::span<const Rational> v);

}  // namespace monocone
