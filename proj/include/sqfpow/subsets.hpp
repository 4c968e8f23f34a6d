#ifndef SQFPOW_SUBSETS_HPP
#define SQFPOW_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sqfpow {

// A subset of {1,...,63} packed into one machine word; bit (v-1) holds vertex
// or variable index v. Everything in this toolkit (vertex sets, monomial
// supports, simplicial faces) is one of these.
using Subset = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr Subset bit_of(int v) { return Subset{1} << (v - 1); }

constexpr bool contains(Subset s, int v) { return (s & bit_of(v)) != 0; }

constexpr int popcount(Subset s) { return std::popcount(s); }

constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// Smallest element, 1-based. Undefined for the empty set.
constexpr int min_element(Subset s) { return std::countr_zero(s) + 1; }

// Largest element, 1-based. Undefined for the empty set.
constexpr int max_element(Subset s) { return 64 - std::countl_zero(s); }

// Full set {1,...,n}.
constexpr Subset full_set(int n) {
  return n == 0 ? Subset{0} : (~Subset{0} >> (64 - n));
}

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s) {
    out.push_back(min_element(s));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_from(const std::vector<int>& xs) {
  Subset s = 0;
  for (int v : xs) s |= bit_of(v);
  return s;
}

}  // namespace sqfpow

#endif
