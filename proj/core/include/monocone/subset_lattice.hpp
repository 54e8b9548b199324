#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monocone {

inline constexpr int kMaxSystems = 16;
// Largest n for which lower sets of P_i(N) are enumerated.
inline constexpr int kMaxLowerSetSystems = 6;
// Largest n for which a LowerSetFamily fits its 64-bit member bitset.
inline constexpr int kMaxFamilySystems = 7;

// Subset of the systems {1..n}; bit i-1 of the mask is set iff system i is a member.
//
// Nonempty subsets double as coordinates of a functional: coordinate index
// is mask - 1, so coordinates run in increasing mask order.
class SystemSet {
 public:
  SystemSet() = default;
  SystemSet(std::uint32_t mask, int n);

  // Builds a set from 1-based system indices.
  static SystemSet of(std::initializer_list<int> systems, int n);
  static SystemSet from_members(const std::vector<int>& systems, int n);
  static SystemSet full(int n);

  std::uint32_t mask() const { return mask_; }
  int n() const { return n_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int system) const { return (mask_ >> (system - 1)) & 1U; }
  bool is_subset_of(SystemSet other) const { return (mask_ & ~other.mask_) == 0; }

  SystemSet with(int system) const;
  SystemSet without(int system) const;
  SystemSet operator|(SystemSet other) const { return {mask_ | other.mask_, n_}; }
  SystemSet operator&(SystemSet other) const { return {mask_ & other.mask_, n_}; }

  // Position of this (nonempty) subset in the coordinate order.
  std::size_t coordinate() const { return mask_ - 1; }

  // Sorted 1-based member list.
  std::vector<int> members() const;

  // "{1,3}"; "{}" for the empty set.
  std::string to_string() const;
  // "1,3"; the JSON key form.
  std::string key() const;

  friend bool operator==(SystemSet a, SystemSet b) { return a.mask_ == b.mask_ && a.n_ == b.n_; }
  friend auto operator<=>(SystemSet a, SystemSet b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
  int n_ = 0;
};

// Number of coordinates of a functional over n systems: 2^n - 1.
std::size_t coordinate_count(int n);

// Inverse of SystemSet::key(). Accepts "" or "{}" only when allow_empty.
SystemSet parse_system_set(const std::string& key, int n);

// All 2^(n-1) subsets containing system i, in increasing mask order.
std::vector<SystemSet> subsets_containing(int i, int n);

// A family of subsets of {1..n} that all contain the anchor system i, stored
// as a bitset over the elements of P_i(N) in increasing mask order.
class LowerSetFamily {
 public:
  LowerSetFamily(int anchor, int n, std::uint64_t members = 0);

  // Throws InvalidArgument if a member does not contain the anchor.
  static LowerSetFamily from_members(int anchor, int n, const std::vector<SystemSet>& members);

  int anchor() const { return anchor_; }
  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  // Number of elements of P_i(N), 2^(n-1).
  int poset_size() const { return 1 << (n_ - 1); }

  bool contains(SystemSet s) const;
  std::vector<SystemSet> members() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const;

  // k-th element of P_i(N) in increasing mask order.
  SystemSet element(int k) const;
  // Inverse of element(); s must contain the anchor.
  int element_index(SystemSet s) const;

  std::string to_string() const;

  friend bool operator==(const LowerSetFamily&, const LowerSetFamily&) = default;

 private:
  int anchor_;
  int n_;
  std::uint64_t bits_;
};

// True iff the family is downward closed within P_i(N).
bool is_lower_set(const LowerSetFamily& family);

// Every lower set of P_i(N) exactly once, sorted by (cardinality, member bitset).
std::vector<LowerSetFamily> enumerate_lower_sets(int i, int n);

// Filter over all 2^(2^(n-1)) subfamilies. Only for n <= 5.
std::vector<LowerSetFamily> enumerate_lower_sets_brute_force(int i, int n);

// Depth-first extension along the increasing-mask linear extension.
std::vector<LowerSetFamily> enumerate_lower_sets_recursive(int i, int n);

}  // namespace monocone
