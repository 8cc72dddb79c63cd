#pragma once

#include <bit>
#include <cstdint>
#include <compare>

namespace booksat {

// Fixed-width 128-bit set. One adjacency row; vertex ids are bit positions.
struct Bits128 {
  uint64_t w0 = 0;
  uint64_t w1 = 0;

  static constexpr int capacity = 128;

  static constexpr Bits128 none() { return {}; }

  // Mask with bits [0, n) set.
  static constexpr Bits128 below(int n) {
    if (n <= 0) return {};
    if (n >= 128) return {~0ULL, ~0ULL};
    if (n < 64) return {(1ULL << n) - 1, 0};
    if (n == 64) return {~0ULL, 0};
    return {~0ULL, (1ULL << (n - 64)) - 1};
  }

  static constexpr Bits128 single(int i) {
    return i < 64 ? Bits128{1ULL << i, 0} : Bits128{0, 1ULL << (i - 64)};
  }

  constexpr bool test(int i) const {
    return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ULL) != 0;
  }
  constexpr void set(int i) {
    if (i < 64) w0 |= 1ULL << i; else w1 |= 1ULL << (i - 64);
  }
  constexpr void reset(int i) {
    if (i < 64) w0 &= ~(1ULL << i); else w1 &= ~(1ULL << (i - 64));
  }

  constexpr int count() const { return std::popcount(w0) + std::popcount(w1); }
  constexpr bool any() const { return (w0 | w1) != 0; }
  constexpr bool empty() const { return (w0 | w1) == 0; }

  // Lowest set bit; undefined on the empty set.
  constexpr int lowest() const {
    return w0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1);
  }

  constexpr Bits128 operator&(Bits128 o) const { return {w0 & o.w0, w1 & o.w1}; }
  constexpr Bits128 operator|(Bits128 o) const { return {w0 | o.w0, w1 | o.w1}; }
  constexpr Bits128 operator^(Bits128 o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
  constexpr Bits128 minus(Bits128 o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  constexpr Bits128& operator&=(Bits128 o) { w0 &= o.w0; w1 &= o.w1; return *this; }
  constexpr Bits128& operator|=(Bits128 o) { w0 |= o.w0; w1 |= o.w1; return *this; }

  constexpr bool intersects(Bits128 o) const {
    return ((w0 & o.w0) | (w1 & o.w1)) != 0;
  }
  constexpr bool is_subset_of(Bits128 o) const {
    return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
  }

  friend constexpr bool operator==(Bits128, Bits128) = default;
  friend constexpr auto operator<=>(const Bits128& a, const Bits128& b) {
    // w1 holds the high bits, so compare it first.
    if (auto c = a.w1 <=> b.w1; c != 0) return c;
    return a.w0 <=> b.w0;
  }

  // Calls fn(i) for each set bit, ascending.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (uint64_t w = w0; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      fn(i);
    }
    for (uint64_t w = w1; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      fn(64 + i);
    }
  }
};

inline constexpr int intersection_count(Bits128 a, Bits128 b) {
  return std::popcount(a.w0 & b.w0) + std::popcount(a.w1 & b.w1);
}

}  // namespace booksat
