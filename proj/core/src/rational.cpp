#include "monocone/rational.hpp"

#include <sstream>

#include "monocone/error.hpp"

namespace monocone {

namespace {

bool valid_integer_token(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) throw DimensionMismatch("dot: vector lengths differ");
  Rational acc = 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (sgn(lhs[k]) != 0 && sgn(rhs[k]) != 0) acc += lhs[k] * rhs[k];
  }
  return acc;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalVector normalize_positive(std::span<const Rational> v) {
  RationalVector out(v.begin(), v.end());
  if (is_zero(v)) return out;
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  for (auto& x : out) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    x = Rational(scaled / num_gcd);
  }
  return out;
}

bool positive_multiple(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) return false;
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return normalize_positive(a) == normalize_positive(b);
}

std::string format_vector(std::span<const Rational> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out << ", ";
    out << to_string(v[k]);
  }
  out << ')';
  return out.str();
}

}  // namespace monocone
