#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mhodge/error.hpp"

namespace mhodge {

// Subset of a ground set {0,...,n-1} as a 64-bit mask. Ground sets are
// capped at 64; the bundled corpus stays at n <= 16 so every enumeration
// in the library can afford to be exhaustive.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  static constexpr Subset empty_set() { return Subset{0}; }
  static constexpr Subset full_set(int n) {
    return Subset{n >= 64 ? ~0ull : ((1ull << n) - 1)};
  }
  static constexpr Subset single(int i) { return Subset{1ull << i}; }

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }

  constexpr Subset with(int i) const { return Subset{bits | (1ull << i)}; }
  constexpr Subset without(int i) const { return Subset{bits & ~(1ull << i)}; }

  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits != other.bits;
  }
  constexpr bool intersects(Subset other) const { return (bits & other.bits) != 0; }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset{a.bits ^ b.bits}; }
  // set difference
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits <=> b.bits; }

  // Smallest element; only valid on non-empty subsets.
  int min_element() const {
    MHODGE_CHECK(bits != 0, "min_element of empty subset");
    return std::countr_zero(bits);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Renders as sorted comma separated indices in braces, e.g. "{0,2,5}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
};

// Calls fn(S) for every subset S of mask.
template <typename Fn>
void for_each_subset_of(Subset mask, Fn&& fn) {
  std::uint64_t sub = mask.bits;
  while (true) {
    fn(Subset{sub});
    if (sub == 0) break;
    sub = (sub - 1) & mask.bits;
  }
}

}  // namespace mhodge

template <>
struct std::hash<mhodge::Subset> {
  std::size_t operator()(mhodge::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits);
  }
};
