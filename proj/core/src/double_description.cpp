// Motzkin double description: incremental insertion of inequalities into a
// pointed cone, with exact integer ray arithmetic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

#include "monocone/cone.hpp"
#include "monocone/error.hpp"

namespace monocone {

namespace {

struct Overflow {};

using Word = std::uint64_t;

constexpr __int128 kRayLimit = __int128{1} << 62;
constexpr __int128 kRowLimit = __int128{1} << 31;

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 abs128(__int128 x) { return x < 0 ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x); }

// Checked 64-bit arithmetic; throws Overflow so the caller can rerun with GMP.
struct SmallInt {
  using Int = std::int64_t;

  static Int from(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    long value = z.get_si();
    if (value >= kRowLimit || value <= -kRowLimit) throw Overflow{};
    return value;
  }
  static Int from_ray(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    long value = z.get_si();
    if (value >= kRayLimit || value <= -kRayLimit) throw Overflow{};
    return value;
  }
  static Integer to_integer(Int x) { return Integer(static_cast<long>(x)); }
  static int sign(Int x) { return (x > 0) - (x < 0); }

  static Int dot(const std::vector<Int>& row, const Int* ray, std::size_t k) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < k; ++c) acc += static_cast<__int128>(row[c]) * ray[c];
    if (acc >= kRayLimit || acc <= -kRayLimit) throw Overflow{};
    return static_cast<Int>(acc);
  }

  // out = a * p + b * q with a, b > 0, divided by the gcd of its entries.
  static void combine(Int a, const Int* p, Int b, const Int* q, std::size_t k, Int* out) {
    std::vector<__int128> wide(k);
    unsigned __int128 g = 0;
    for (std::size_t c = 0; c < k; ++c) {
      wide[c] = static_cast<__int128>(a) * p[c] + static_cast<__int128>(b) * q[c];
      g = gcd128(g, abs128(wide[c]));
    }
    if (g == 0) throw InvariantBreach("double description produced a zero ray");
    for (std::size_t c = 0; c < k; ++c) {
      __int128 value = wide[c] / static_cast<__int128>(g);
      if (value >= kRayLimit || value <= -kRayLimit) throw Overflow{};
      out[c] = static_cast<Int>(value);
    }
  }
};

struct BigInt {
  using Int = Integer;

  static Int from(const Integer& z) { return z; }
  static Int from_ray(const Integer& z) { return z; }
  static Integer to_integer(const Int& x) { return x; }
  static int sign(const Int& x) { return sgn(x); }

  static Int dot(const std::vector<Int>& row, const Int* ray, std::size_t k) {
    Int acc = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (sgn(row[c]) != 0) acc += row[c] * ray[c];
    }
    return acc;
  }

  static void combine(const Int& a, const Int* p, const Int& b, const Int* q, std::size_t k, Int* out) {
    Int g = 0;
    for (std::size_t c = 0; c < k; ++c) {
      out[c] = a * p[c] + b * q[c];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[c].get_mpz_t());
    }
    if (g == 0) throw InvariantBreach("double description produced a zero ray");
    for (std::size_t c = 0; c < k; ++c) mpz_divexact(out[c].get_mpz_t(), out[c].get_mpz_t(), g.get_mpz_t());
  }
};

// Rays stored flat: coordinates in one array, zero-set bitsets in another.
template <class Int>
struct RaySet {
  std::size_t k = 0;
  std::size_t words = 0;
  std::vector<Int> coords;
  std::vector<Word> zeros;

  std::size_t size() const { return k == 0 ? 0 : coords.size() / k; }
  const Int* ray(std::size_t r) const { return coords.data() + r * k; }
  const Word* zero(std::size_t r) const { return zeros.data() + r * words; }
};

bool test_bit(const Word* bits, std::size_t b) { return (bits[b / 64] >> (b % 64)) & 1U; }

template <class Arith>
class Engine {
 public:
  using Int = typename Arith::Int;

  Engine(const RationalMatrix& rows, std::size_t k, const DDOptions& options)
      : rows_(rows), k_(k), options_(options), words_((rows.size() + 63) / 64) {
    int_rows_.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<Int> converted;
      converted.reserve(k);
      for (const auto& x : row) {
        if (x.get_den() != 1) throw InvariantBreach("double description rows must be integral");
        converted.push_back(Arith::from(x.get_num()));
      }
      int_rows_.push_back(std::move(converted));
    }
  }

  std::vector<RationalVector> run(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> basis_rows = pick_independent_rows(order);
    initialize(basis_rows);
    std::vector<bool> inserted(rows_.size(), false);
    for (std::size_t r : basis_rows) inserted[r] = true;
    std::size_t done = basis_rows.size();
    report(done);
    for (std::size_t r : order) {
      if (inserted[r]) continue;
      insert(r);
      inserted[r] = true;
      report(++done);
    }
    std::vector<RationalVector> out;
    out.reserve(rays_.size());
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      RationalVector v(k_);
      for (std::size_t c = 0; c < k_; ++c) v[c] = Rational(Arith::to_integer(rays_.ray(r)[c]));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void report(std::size_t done) const {
    if (options_.progress) options_.progress(DDProgress{done, rows_.size(), rays_.size()});
  }

  std::vector<std::size_t> pick_independent_rows(const std::vector<std::size_t>& order) const {
    RationalMatrix chosen_rows;
    std::vector<std::size_t> chosen;
    for (std::size_t r : order) {
      chosen_rows.push_back(rows_[r]);
      if (rank(chosen_rows, k_) == chosen_rows.size()) {
        chosen.push_back(r);
        if (chosen.size() == k_) break;
      } else {
        chosen_rows.pop_back();
      }
    }
    if (chosen.size() != k_) throw InvariantBreach("projected inequality system is not of full column rank");
    return chosen;
  }

  // The cone {x : A_S x >= 0} is generated by the columns of A_S^{-1}.
  void initialize(const std::vector<std::size_t>& basis_rows) {
    RationalMatrix square;
    for (std::size_t r : basis_rows) square.push_back(rows_[r]);
    RationalMatrix inv = inverse(square);
    rays_.k = k_;
    rays_.words = words_;
    for (std::size_t j = 0; j < k_; ++j) {
      RationalVector column(k_);
      for (std::size_t c = 0; c < k_; ++c) column[c] = inv[c][j];
      column = normalize_positive(column);
      for (std::size_t c = 0; c < k_; ++c) rays_.coords.push_back(Arith::from_ray(column[c].get_num()));
      std::vector<Word> zero(words_, 0);
      for (std::size_t t = 0; t < k_; ++t) {
        if (t != j) zero[basis_rows[t] / 64] |= Word{1} << (basis_rows[t] % 64);
      }
      rays_.zeros.insert(rays_.zeros.end(), zero.begin(), zero.end());
    }
  }

  bool combinatorially_adjacent(std::size_t p, std::size_t q, const std::vector<Word>& common) const {
    const std::size_t total = rays_.size();
    for (std::size_t r = 0; r < total; ++r) {
      if (r == p || r == q) continue;
      const Word* z = rays_.zero(r);
      bool covers = true;
      for (std::size_t w = 0; w < words_; ++w) {
        if (common[w] & ~z[w]) {
          covers = false;
          break;
        }
      }
      if (covers) return false;
    }
    return true;
  }

  bool algebraically_adjacent(const std::vector<Word>& common) const {
    RationalMatrix tight;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      if (test_bit(common.data(), b)) tight.push_back(rows_[b]);
    }
    auto bound = modular_rank_lower_bound(tight, k_);
    if (bound && *bound + 2 == k_) return true;
    return rank(tight, k_) + 2 == k_;
  }

  void collect_pairs(const std::vector<std::size_t>& positive, const std::vector<std::size_t>& negative,
                     std::size_t begin, std::size_t end, std::vector<std::pair<std::size_t, std::size_t>>& out) const {
    std::vector<Word> common(words_);
    const std::size_t needed = k_ >= 2 ? k_ - 2 : 0;
    for (std::size_t a = begin; a < end; ++a) {
      const std::size_t p = positive[a];
      const Word* zp = rays_.zero(p);
      for (std::size_t q : negative) {
        const Word* zq = rays_.zero(q);
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          common[w] = zp[w] & zq[w];
          count += static_cast<std::size_t>(std::popcount(common[w]));
        }
        if (count < needed) continue;
        bool adjacent = options_.adjacency == AdjacencyTest::Combinatorial ? combinatorially_adjacent(p, q, common)
                                                                            : algebraically_adjacent(common);
        if (adjacent) out.emplace_back(p, q);
      }
    }
  }

  void insert(std::size_t row_index) {
    const auto& row = int_rows_[row_index];
    const std::size_t total = rays_.size();
    std::vector<Int> values(total);
    std::vector<std::size_t> positive, zero, negative;
    for (std::size_t r = 0; r < total; ++r) {
      values[r] = Arith::dot(row, rays_.ray(r), k_);
      int s = Arith::sign(values[r]);
      (s > 0 ? positive : s < 0 ? negative : zero).push_back(r);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (!negative.empty() && !positive.empty()) {
      unsigned jobs = std::max(1U, options_.jobs);
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, positive.size()));
      if (jobs <= 1) {
        collect_pairs(positive, negative, 0, positive.size(), pairs);
      } else {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partial(jobs);
        std::vector<std::thread> workers;
        const std::size_t chunk = (positive.size() + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
          std::size_t begin = std::min(positive.size(), j * chunk);
          std::size_t end = std::min(positive.size(), begin + chunk);
          workers.emplace_back([&, j, begin, end] { collect_pairs(positive, negative, begin, end, partial[j]); });
        }
        for (auto& w : workers) w.join();
        for (auto& part : partial) pairs.insert(pairs.end(), part.begin(), part.end());
      }
    }

    const std::size_t next_size = positive.size() + zero.size() + pairs.size();
    if (next_size > options_.max_rays) {
      throw ResourceLimitExceeded("double description exceeded the ray cap of " + std::to_string(options_.max_rays) +
                                  " (" + std::to_string(next_size) + " rays)");
    }

    RaySet<Int> next;
    next.k = k_;
    next.words = words_;
    next.coords.reserve(next_size * k_);
    next.zeros.reserve(next_size * words_);
    const Word bit = Word{1} << (row_index % 64);
    const std::size_t word = row_index / 64;
    auto keep = [&](std::size_t r, bool tight) {
      next.coords.insert(next.coords.end(), rays_.ray(r), rays_.ray(r) + k_);
      std::size_t at = next.zeros.size();
      next.zeros.insert(next.zeros.end(), rays_.zero(r), rays_.zero(r) + words_);
      if (tight) next.zeros[at + word] |= bit;
    };
    for (std::size_t r : positive) keep(r, false);
    for (std::size_t r : zero) keep(r, true);
    std::vector<Int> combined(k_);
    for (auto [p, q] : pairs) {
      Int a = -values[q];
      const Int& b = values[p];
      Arith::combine(a, rays_.ray(p), b, rays_.ray(q), k_, combined.data());
      next.coords.insert(next.coords.end(), combined.begin(), combined.end());
      std::size_t at = next.zeros.size();
      for (std::size_t w = 0; w < words_; ++w) next.zeros.push_back(rays_.zero(p)[w] & rays_.zero(q)[w]);
      next.zeros[at + word] |= bit;
    }
    rays_ = std::move(next);
  }

  const RationalMatrix& rows_;
  std::vector<std::vector<Int>> int_rows_;
  std::size_t k_;
  const DDOptions& options_;
  std::size_t words_;
  RaySet<Int> rays_;
};

std::vector<std::size_t> insertion_order(const HRep& h, const DDOptions& options) {
  const std::size_t m = h.inequalities.size();
  if (!options.insertion_order.empty()) {
    std::vector<std::size_t> sorted = options.insertion_order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == m;
    for (std::size_t r = 0; permutation && r < m; ++r) permutation = sorted[r] == r;
    if (!permutation) throw InvalidArgument("insertion order is not a permutation of the inequality rows");
    return options.insertion_order;
  }
  std::vector<std::size_t> order(m);
  for (std::size_t r = 0; r < m; ++r) order[r] = r;
  if (options.rule == InsertionRule::Sparsity) {
    std::vector<std::size_t> nonzeros(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
      for (const auto& x : h.inequalities[r]) nonzeros[r] += sgn(x) != 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nonzeros[a] < nonzeros[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h.inequalities[b] < h.inequalities[a]; });
  }
  return order;
}

RationalMatrix canonical_rays(RationalMatrix rays) {
  for (auto& r : rays) r = normalize_positive(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

VRep dd_convert(const HRep& h, const DDOptions& options) {
  h.validate();
  const std::size_t d = h.dim;
  VRep out;
  out.dim = d;
  out.n = h.n;
  out.name = h.name;

  RationalMatrix all_rows = h.equalities;
  all_rows.insert(all_rows.end(), h.inequalities.begin(), h.inequalities.end());
  out.lineality = kernel_basis(all_rows, d);

  // Work inside the equality kernel intersected with the orthogonal complement
  // of the lineality space; the cone is pointed there.
  RationalMatrix flat = h.equalities;
  flat.insert(flat.end(), out.lineality.begin(), out.lineality.end());
  RationalMatrix basis = kernel_basis(flat, d);
  const std::size_t k = basis.size();
  if (k == 0) return out;

  // Rows restricted to the working subspace, in basis coordinates.
  HRep projected;
  projected.dim = k;
  std::vector<std::size_t> original_index;
  for (std::size_t r = 0; r < h.inequalities.size(); ++r) {
    RationalVector row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = dot(h.inequalities[r], basis[c]);
    if (is_zero(row)) continue;
    projected.inequalities.push_back(normalize_positive(row));
    original_index.push_back(r);
  }

  // The order is decided on the caller's rows, then translated to projected rows.
  DDOptions local = options;
  local.insertion_order.clear();
  std::vector<std::size_t> position(h.inequalities.size(), SIZE_MAX);
  for (std::size_t p = 0; p < original_index.size(); ++p) position[original_index[p]] = p;
  for (std::size_t r : insertion_order(h, options)) {
    if (position[r] != SIZE_MAX) local.insertion_order.push_back(position[r]);
  }

  std::vector<RationalVector> reduced;
  try {
    reduced = Engine<SmallInt>(projected.inequalities, k, local).run(local.insertion_order);
  } catch (const Overflow&) {
    reduced = Engine<BigInt>(projected.inequalities, k, local).run(local.insertion_order);
  }

  RationalMatrix lifted;
  lifted.reserve(reduced.size());
  for (const auto& y : reduced) {
    RationalVector r(d, Rational(0));
    for (std::size_t c = 0; c < k; ++c) {
      if (sgn(y[c]) == 0) continue;
      for (std::size_t t = 0; t < d; ++t) r[t] += y[c] * basis[c][t];
    }
    lifted.push_back(std::move(r));
  }
  out.rays = canonical_rays(std::move(lifted));
  return out;
}

HRep dual_convert(const VRep& v, const DDOptions& options) {
  v.validate();
  HRep dual;
  dual.dim = v.dim;
  dual.n = v.n;
  dual.inequalities = v.rays;
  dual.equalities = v.lineality;
  VRep dual_generators = dd_convert(dual, options);
  HRep out;
  out.dim = v.dim;
  out.n = v.n;
  out.name = v.name;
  out.inequalities = std::move(dual_generators.rays);
  out.equalities = std::move(dual_generators.lineality);
  return out;
}

}  // namespace monocone
