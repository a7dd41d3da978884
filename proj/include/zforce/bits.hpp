#pragma once

// Raw bit masks used by the hot loops. Two representations share one
// interface: a single machine word for graphs up to 64 vertices and a
// fixed four-word mask for graphs up to kMaxVertices.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <type_traits>

namespace zf {

inline constexpr std::size_t kMaxVertices = 256;
inline constexpr std::size_t kWordBits = 64;

namespace bits {

inline constexpr std::size_t kWideWords = kMaxVertices / kWordBits;

struct Wide {
  std::array<std::uint64_t, kWideWords> w{};

  constexpr Wide& operator|=(const Wide& o) {
    for (std::size_t i = 0; i < kWideWords; ++i) w[i] |= o.w[i];
    return *this;
  }
  constexpr Wide& operator&=(const Wide& o) {
    for (std::size_t i = 0; i < kWideWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  friend constexpr Wide operator|(Wide a, const Wide& b) { return a |= b; }
  friend constexpr Wide operator&(Wide a, const Wide& b) { return a &= b; }
  friend constexpr Wide operator~(Wide a) {
    for (auto& x : a.w) x = ~x;
    return a;
  }
  friend constexpr bool operator==(const Wide&, const Wide&) = default;
  // Orders masks as unsigned integers (highest word most significant).
  friend constexpr std::strong_ordering operator<=>(const Wide& a, const Wide& b) {
    for (std::size_t i = kWideWords; i-- > 0;) {
      if (a.w[i] != b.w[i]) return a.w[i] <=> b.w[i];
    }
    return std::strong_ordering::equal;
  }
};

constexpr int popcount(std::uint64_t m) { return std::popcount(m); }
constexpr int popcount(const Wide& m) {
  int c = 0;
  for (auto x : m.w) c += std::popcount(x);
  return c;
}

constexpr bool test(std::uint64_t m, int i) { return (m >> i) & 1u; }
constexpr bool test(const Wide& m, int i) {
  return (m.w[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
}

constexpr void set(std::uint64_t& m, int i) { m |= std::uint64_t{1} << i; }
constexpr void set(Wide& m, int i) {
  m.w[static_cast<std::size_t>(i) / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

constexpr void reset(std::uint64_t& m, int i) { m &= ~(std::uint64_t{1} << i); }
constexpr void reset(Wide& m, int i) {
  m.w[static_cast<std::size_t>(i) / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

constexpr bool none(std::uint64_t m) { return m == 0; }
constexpr bool none(const Wide& m) {
  for (auto x : m.w)
    if (x) return false;
  return true;
}

// Exactly one bit set.
constexpr bool single(std::uint64_t m) { return m && !(m & (m - 1)); }
constexpr bool single(const Wide& m) {
  bool seen = false;
  for (auto x : m.w) {
    if (!x) continue;
    if (seen || (x & (x - 1))) return false;
    seen = true;
  }
  return seen;
}

// Index of the lowest set bit; undefined on an empty mask.
constexpr int lowest(std::uint64_t m) { return std::countr_zero(m); }
constexpr int lowest(const Wide& m) {
  for (std::size_t i = 0; i < kWideWords; ++i) {
    if (m.w[i]) return static_cast<int>(i * kWordBits) + std::countr_zero(m.w[i]);
  }
  return -1;
}

template <class Mask>
constexpr Mask universe(int n) {
  Mask m{};
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    m = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  } else {
    for (int i = 0; i < n; ++i) set(m, i);
  }
  return m;
}

template <class F>
constexpr void for_each(std::uint64_t m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

template <class F>
constexpr void for_each(const Wide& m, F&& f) {
  for (std::size_t i = 0; i < kWideWords; ++i) {
    std::uint64_t x = m.w[i];
    while (x) {
      f(static_cast<int>(i * kWordBits) + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace bits
}  // namespace zf
