#pragma once

#include <string>
#include <vector>

#include "monocone/rational.hpp"
#include "monocone/subset_lattice.hpp"

namespace monocone {

// Linear entropic formula f(S) = sum_I alpha_I S(I) over n systems.
//
// Coefficients are dense, one per nonempty subset, in increasing mask order
// (coordinate k holds the subset with mask k + 1).
class Functional {
 public:
  Functional() = default;
  explicit Functional(int n);
  Functional(int n, RationalVector coeffs);

  // Unit vector e_I.
  static Functional unit(SystemSet subset);

  int n() const { return n_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const RationalVector& coeffs() const { return coeffs_; }

  const Rational& operator[](SystemSet s) const { return coeffs_.at(s.coordinate()); }
  Rational& operator[](SystemSet s) { return coeffs_.at(s.coordinate()); }

  bool is_zero() const;

  // Positive rescaling to coprime integers.
  Functional normalized() const;

  // Same formula over a larger system count (new coordinates are zero).
  Functional extended(int n) const;

  Functional& operator+=(const Functional& other);
  Functional& operator-=(const Functional& other);
  Functional& operator*=(const Rational& factor);
  friend Functional operator+(Functional a, const Functional& b) { return a += b; }
  friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
  friend Functional operator*(const Rational& c, Functional a) { return a *= c; }
  friend Functional operator-(Functional a) { return a *= Rational(-1); }
  friend bool operator==(const Functional&, const Functional&) = default;

  // Human-readable form, e.g. "S(1) + S(2) - S(1,2)".
  std::string to_string() const;

 private:
  int n_ = 0;
  RationalVector coeffs_;
};

// A permutation of {1..n}, stored as the 1-based image of each system.
class Permutation {
 public:
  // Throws InvalidArgument unless images is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Transposition of systems a and b.
  static Permutation swap(int a, int b, int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int system) const { return images_.at(system - 1); }
  SystemSet operator()(SystemSet s) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (*this ∘ first): apply first, then *this.
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// All n! permutations of {1..n} in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

// Relabels systems: the coefficient of sigma(I) in the result equals the
// coefficient of I in alpha.
Functional permute_functional(const Functional& alpha, const Permutation& sigma);

}  // namespace monocone
