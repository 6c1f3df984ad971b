#pragma once

#include <cstdint>
#include <ostream>

namespace qmzv {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kPrime61b = 2305843009213693921ULL;
inline constexpr std::uint64_t kPrime60 = 1152921504606846883ULL;

/// Residues modulo a compile-time prime below 2^61.
template <std::uint64_t P>
struct ModInt {
  static_assert(P < (std::uint64_t{1} << 61), "modulus must fit the lazy accumulator");
  static constexpr std::uint64_t modulus = P;

  std::uint64_t v = 0;

  constexpr ModInt() = default;
  constexpr ModInt(long long x) {  // NOLINT(google-explicit-constructor)
    long long r = x % static_cast<long long>(P);
    v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
  }
  static constexpr ModInt raw(std::uint64_t x) {
    ModInt m;
    m.v = x;
    return m;
  }

  static constexpr std::uint64_t reduce(unsigned __int128 x) {
    if constexpr (P == kMersenne61) {
      std::uint64_t lo = static_cast<std::uint64_t>(x & P);
      unsigned __int128 hi = x >> 61;
      unsigned __int128 s = lo + hi;
      while (s >= (static_cast<unsigned __int128>(1) << 61)) s = (s & P) + (s >> 61);
      std::uint64_t r = static_cast<std::uint64_t>(s);
      return r >= P ? r - P : r;
    } else {
      return static_cast<std::uint64_t>(x % P);
    }
  }

  constexpr ModInt& operator+=(ModInt o) {
    v += o.v;
    if (v >= P) v -= P;
    return *this;
  }
  constexpr ModInt& operator-=(ModInt o) {
    v = v >= o.v ? v - o.v : v + P - o.v;
    return *this;
  }
  constexpr ModInt& operator*=(ModInt o) {
    v = reduce(static_cast<unsigned __int128>(v) * o.v);
    return *this;
  }
  friend constexpr ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend constexpr ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  constexpr ModInt operator-() const { return raw(v == 0 ? 0 : P - v); }
  friend constexpr bool operator==(ModInt a, ModInt b) { return a.v == b.v; }

  constexpr ModInt pow(std::uint64_t e) const {
    ModInt r = 1, b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  constexpr ModInt inverse() const { return pow(P - 2); }

  friend std::ostream& operator<<(std::ostream& os, ModInt a) { return os << a.v; }
};

}  // namespace qmzv
