#include "monocone/subset_lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "monocone/error.hpp"

namespace monocone {

namespace {

void check_system_count(int n, int bound) {
  if (n < 1 || n > bound) {
    throw OutOfRange("system count " + std::to_string(n) + " outside 1.." + std::to_string(bound));
  }
}

void check_system_index(int i, int n) {
  if (i < 1 || i > n) {
    throw OutOfRange("system index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

void sort_canonical(std::vector<LowerSetFamily>& families) {
  std::sort(families.begin(), families.end(), [](const LowerSetFamily& a, const LowerSetFamily& b) {
    int ca = a.size();
    int cb = b.size();
    if (ca != cb) return ca < cb;
    return a.bits() < b.bits();
  });
}

}  // namespace

SystemSet::SystemSet(std::uint32_t mask, int n) : mask_(mask), n_(n) {
  check_system_count(n, kMaxSystems);
  if (n < 32 && mask >= (std::uint32_t{1} << n)) {
    throw OutOfRange("subset mask " + std::to_string(mask) + " has members beyond system " + std::to_string(n));
  }
}

SystemSet SystemSet::of(std::initializer_list<int> systems, int n) {
  return from_members(std::vector<int>(systems), n);
}

SystemSet SystemSet::from_members(const std::vector<int>& systems, int n) {
  check_system_count(n, kMaxSystems);
  std::uint32_t mask = 0;
  for (int s : systems) {
    check_system_index(s, n);
    mask |= std::uint32_t{1} << (s - 1);
  }
  return {mask, n};
}

SystemSet SystemSet::full(int n) {
  check_system_count(n, kMaxSystems);
  return {(std::uint32_t{1} << n) - 1, n};
}

int SystemSet::size() const { return std::popcount(mask_); }

SystemSet SystemSet::with(int system) const {
  check_system_index(system, n_);
  return {mask_ | (std::uint32_t{1} << (system - 1)), n_};
}

SystemSet SystemSet::without(int system) const {
  check_system_index(system, n_);
  return {mask_ & ~(std::uint32_t{1} << (system - 1)), n_};
}

std::vector<int> SystemSet::members() const {
  std::vector<int> out;
  for (int s = 1; s <= n_; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::string SystemSet::to_string() const { return "{" + key() + "}"; }

std::string SystemSet::key() const {
  std::string out;
  for (int s : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

std::size_t coordinate_count(int n) {
  check_system_count(n, kMaxSystems);
  return (std::size_t{1} << n) - 1;
}

SystemSet parse_system_set(const std::string& key, int n) {
  std::string body = key;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  if (body.empty()) return {0, n};
  std::vector<int> systems;
  std::istringstream in(body);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token.empty() || token.size() > 2 || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed subset key '" + key + "'");
    }
    int s = std::stoi(token);
    if (s < 1 || s > n) throw ParseError("system " + token + " out of range in subset '" + key + "'");
    systems.push_back(s);
  }
  return SystemSet::from_members(systems, n);
}

std::vector<SystemSet> subsets_containing(int i, int n) {
  check_system_count(n, kMaxSystems);
  check_system_index(i, n);
  std::vector<SystemSet> out;
  out.reserve(std::size_t{1} << (n - 1));
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (mask & bit) out.emplace_back(mask, n);
  }
  return out;
}

LowerSetFamily::LowerSetFamily(int anchor, int n, std::uint64_t members) : anchor_(anchor), n_(n), bits_(members) {
  check_system_count(n, kMaxFamilySystems);
  check_system_index(anchor, n);
  int width = 1 << (n - 1);
  if (width < 64 && (members >> width) != 0) throw OutOfRange("family bitset wider than P_i(N)");
}

LowerSetFamily LowerSetFamily::from_members(int anchor, int n, const std::vector<SystemSet>& members) {
  LowerSetFamily family(anchor, n);
  for (SystemSet s : members) {
    if (s.n() != n) throw DimensionMismatch("member " + s.to_string() + " has a different system count");
    if (!s.contains(anchor)) {
      throw InvalidArgument("member " + s.to_string() + " does not contain anchor system " + std::to_string(anchor));
    }
    family.bits_ |= std::uint64_t{1} << family.element_index(s);
  }
  return family;
}

int LowerSetFamily::size() const { return std::popcount(bits_); }

bool LowerSetFamily::is_full() const {
  int width = poset_size();
  std::uint64_t all = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  return bits_ == all;
}

SystemSet LowerSetFamily::element(int k) const {
  const std::uint32_t low_mask = (std::uint32_t{1} << (anchor_ - 1)) - 1;
  const std::uint32_t index = static_cast<std::uint32_t>(k);
  std::uint32_t mask = (index & low_mask) | (std::uint32_t{1} << (anchor_ - 1)) | ((index & ~low_mask) << 1);
  return {mask, n_};
}

int LowerSetFamily::element_index(SystemSet s) const {
  const std::uint32_t low_mask = (std::uint32_t{1} << (anchor_ - 1)) - 1;
  const std::uint32_t mask = s.mask();
  return static_cast<int>((mask & low_mask) | ((mask >> anchor_) << (anchor_ - 1)));
}

bool LowerSetFamily::contains(SystemSet s) const {
  if (!s.contains(anchor_)) return false;
  return (bits_ >> element_index(s)) & 1U;
}

std::vector<SystemSet> LowerSetFamily::members() const {
  std::vector<SystemSet> out;
  for (int k = 0; k < poset_size(); ++k) {
    if ((bits_ >> k) & 1U) out.push_back(element(k));
  }
  return out;
}

std::string LowerSetFamily::to_string() const {
  std::string out = "{";
  bool first = true;
  for (SystemSet s : members()) {
    if (!first) out += ", ";
    out += s.to_string();
    first = false;
  }
  return out + "}";
}

bool is_lower_set(const LowerSetFamily& family) {
  for (SystemSet x : family.members()) {
    for (int j : x.members()) {
      if (j == family.anchor()) continue;
      if (!family.contains(x.without(j))) return false;
    }
  }
  return true;
}

std::vector<LowerSetFamily> enumerate_lower_sets_brute_force(int i, int n) {
  check_system_count(n, 5);
  check_system_index(i, n);
  const int width = 1 << (n - 1);
  std::vector<LowerSetFamily> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
    LowerSetFamily family(i, n, bits);
    if (is_lower_set(family)) out.push_back(family);
  }
  sort_canonical(out);
  return out;
}

std::vector<LowerSetFamily> enumerate_lower_sets_recursive(int i, int n) {
  check_system_count(n, kMaxLowerSetSystems);
  check_system_index(i, n);
  const LowerSetFamily shape(i, n);
  const int width = shape.poset_size();

  // Immediate predecessors of each element, as a bitset over earlier elements.
  std::vector<std::uint64_t> predecessors(width, 0);
  for (int k = 0; k < width; ++k) {
    SystemSet x = shape.element(k);
    for (int j : x.members()) {
      if (j != i) predecessors[k] |= std::uint64_t{1} << shape.element_index(x.without(j));
    }
  }

  std::vector<LowerSetFamily> out;
  std::vector<std::pair<int, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, bits] = stack.back();
    stack.pop_back();
    if (k == width) {
      out.emplace_back(i, n, bits);
      continue;
    }
    stack.emplace_back(k + 1, bits);
    if ((bits & predecessors[k]) == predecessors[k]) stack.emplace_back(k + 1, bits | (std::uint64_t{1} << k));
  }
  sort_canonical(out);
  return out;
}

std::vector<LowerSetFamily> enumerate_lower_sets(int i, int n) {
  check_system_count(n, kMaxLowerSetSystems);
  check_system_index(i, n);
  if (n <= 5) return enumerate_lower_sets_brute_force(i, n);
  return enumerate_lower_sets_recursive(i, n);
}

}  // namespace monocone
