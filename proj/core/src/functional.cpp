#include "monocone/functional.hpp"

#include <algorithm>
#include <numeric>

#include "monocone/error.hpp"

namespace monocone {

Functional::Functional(int n) : n_(n), coeffs_(coordinate_count(n), Rational(0)) {}

Functional::Functional(int n, RationalVector coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != coordinate_count(n)) {
    throw DimensionMismatch("functional over " + std::to_string(n) + " systems needs " +
                            std::to_string(coordinate_count(n)) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

Functional Functional::unit(SystemSet subset) {
  if (subset.empty()) throw InvalidArgument("the empty set has no coordinate");
  Functional f(subset.n());
  f[subset] = 1;
  return f;
}

bool Functional::is_zero() const { return monocone::is_zero(coeffs_); }

Functional Functional::normalized() const { return {n_, normalize_positive(coeffs_)}; }

Functional Functional::extended(int n) const {
  if (n < n_) throw OutOfRange("cannot shrink a functional from " + std::to_string(n_) + " to " + std::to_string(n));
  Functional out(n);
  // Masks below 2^n_ keep their meaning, so the old coordinates form a prefix.
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
  return out;
}

Functional& Functional::operator+=(const Functional& other) {
  if (other.n_ != n_) throw DimensionMismatch("functionals over different system counts");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Functional& Functional::operator-=(const Functional& other) {
  if (other.n_ != n_) throw DimensionMismatch("functionals over different system counts");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Functional& Functional::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

std::string Functional::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += monocone::to_string(magnitude) + " ";
    out += "S(" + SystemSet(static_cast<std::uint32_t>(k + 1), n_).key() + ")";
  }
  return out.empty() ? "0" : out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int image : images_) {
    if (image < 1 || image > n || seen[image - 1]) throw InvalidArgument("permutation images are not a bijection");
    seen[image - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::swap(int a, int b, int n) {
  auto images = identity(n).images_;
  if (a < 1 || a > n || b < 1 || b > n) throw OutOfRange("transposition index out of range");
  std::swap(images[a - 1], images[b - 1]);
  return Permutation(std::move(images));
}

SystemSet Permutation::operator()(SystemSet s) const {
  if (s.n() != n()) throw DimensionMismatch("permutation and subset have different system counts");
  std::uint32_t mask = 0;
  for (int member : s.members()) mask |= std::uint32_t{1} << ((*this)(member)-1);
  return {mask, s.n()};
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) images[images_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.n() != n()) throw DimensionMismatch("composing permutations of different sizes");
  std::vector<int> images(images_.size());
  for (int s = 1; s <= n(); ++s) images[s - 1] = (*this)(first(s));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Functional permute_functional(const Functional& alpha, const Permutation& sigma) {
  if (sigma.n() != alpha.n()) throw DimensionMismatch("permutation and functional have different system counts");
  const int n = alpha.n();
  Functional out(n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    SystemSet s(mask, n);
    out[sigma(s)] = alpha[s];
  }
  return out;
}

}  // namespace monocone
