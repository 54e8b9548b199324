#include "monocone/catalog.hpp"

#include "monocone/error.hpp"
#include "monocone/orbits.hpp"

namespace monocone {

namespace {

void add_term(Functional& f, SystemSet s, int coefficient) {
  if (!s.empty()) f[s] += coefficient;
}

}  // namespace

Functional conditional_mutual_information(SystemSet a, SystemSet b, SystemSet conditioning) {
  const int n = a.n();
  if (b.n() != n || conditioning.n() != n) throw DimensionMismatch("subsets over different system counts");
  if (a.empty() || b.empty()) throw InvalidArgument("mutual information needs nonempty arguments");
  if (!(a & b).empty() || !(a & conditioning).empty() || !(b & conditioning).empty()) {
    throw InvalidArgument("arguments of I(A;B|K) must be disjoint");
  }
  Functional f(n);
  add_term(f, a | conditioning, 1);
  add_term(f, b | conditioning, 1);
  add_term(f, conditioning, -1);
  add_term(f, a | b | conditioning, -1);
  return f;
}

Functional conditional_mutual_information(int i, int j, SystemSet conditioning, int n) {
  if (i == j) throw InvalidArgument("I(i;j|K) needs i != j");
  return conditional_mutual_information(SystemSet::of({i}, n), SystemSet::of({j}, n), conditioning);
}

Functional mutual_information(int i, int j, int n) {
  if (i == j) throw InvalidArgument("I(i;j) needs i != j");
  return conditional_mutual_information(i, j, SystemSet(0, n), n);
}

Functional conditional_entropy(int j, SystemSet conditioning, int n) {
  if (conditioning.contains(j)) throw InvalidArgument("S(j|K) needs j outside K");
  Functional f(n);
  add_term(f, conditioning.with(j), 1);
  add_term(f, conditioning, -1);
  return f;
}

Functional dual_total_correlation3() {
  constexpr int n = 3;
  Functional f(n);
  f[SystemSet::of({1, 2}, n)] = 1;
  f[SystemSet::of({2, 3}, n)] = 1;
  f[SystemSet::of({1, 3}, n)] = 1;
  f[SystemSet::of({1, 2, 3}, n)] = -2;
  return f;
}

Functional u_monotone4() {
  constexpr int n = 4;
  // I(2;3|1) + I(1;34)
  return conditional_mutual_information(2, 3, SystemSet::of({1}, n), n) +
         conditional_mutual_information(SystemSet::of({1}, n), SystemSet::of({3, 4}, n), SystemSet(0, n));
}

Functional zhang_yeung4() {
  constexpr int n = 4;
  auto cmi = [](int i, int j, std::initializer_list<int> k) {
    return conditional_mutual_information(i, j, SystemSet::of(k, n), n);
  };
  return Rational(2) * cmi(1, 2, {3}) + cmi(1, 3, {2}) + cmi(2, 3, {1}) + cmi(1, 2, {4}) + cmi(3, 4, {}) - cmi(1, 2, {});
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"mutual-information", 2, "I(1;2) = S(1) + S(2) - S(12)", mutual_information(1, 2, 2)},
      {"conditional-mutual-information", 3, "I(1;2|3) = S(13) + S(23) - S(3) - S(123)",
       conditional_mutual_information(1, 2, SystemSet::of({3}, 3), 3)},
      {"dual-total-correlation", 3, "J(1;2;3) = S(12) + S(23) + S(13) - 2 S(123)", dual_total_correlation3()},
      {"u-monotone", 4, "U(1;2;3;4) = S(12) + S(34) + S(13) - S(123) - S(134)", u_monotone4()},
      {"zhang-yeung", 4, "2 I(1;2|3) + I(1;3|2) + I(2;3|1) + I(1;2|4) + I(3;4) - I(1;2)", zhang_yeung4()},
  };
}

Functional catalog_functional(const std::string& name, int n) {
  for (auto& entry : catalog_entries()) {
    if (entry.name != name) continue;
    if (n == 0) return entry.functional;
    if (n < entry.min_n) {
      throw InvalidArgument("'" + name + "' needs at least " + std::to_string(entry.min_n) + " systems");
    }
    return entry.functional.extended(n);
  }
  throw InvalidArgument("unknown catalog formula '" + name + "'");
}

std::optional<std::string> identify(const Functional& alpha) {
  if (alpha.is_zero()) return std::nullopt;
  Functional rep = canonical_representative(alpha);
  for (const auto& entry : catalog_entries()) {
    if (entry.min_n > alpha.n()) continue;
    if (canonical_representative(entry.functional.extended(alpha.n())) == rep) return entry.name;
  }
  return std::nullopt;
}

}  // namespace monocone
