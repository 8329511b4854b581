#pragma once

#include <cstdint>

// Base-p digit arithmetic on packed indices. Field elements and residues are
// both encoded as base-p digit strings (digit i = i-th F_p coordinate), so
// additive structure is digit-wise arithmetic modulo p.
namespace hooleyff::detail {

inline std::uint64_t digit_add(std::uint64_t a, std::uint64_t b, std::uint32_t p) noexcept {
  if (p == 2) return a ^ b;
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  while (a != 0 || b != 0) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

inline std::uint64_t digit_neg(std::uint64_t a, std::uint32_t p) noexcept {
  if (p == 2) return a;
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  while (a != 0) {
    const std::uint64_t d = a % p;
    if (d != 0) out += (p - d) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

inline std::uint64_t digit_sub(std::uint64_t a, std::uint64_t b, std::uint32_t p) noexcept {
  return digit_add(a, digit_neg(b, p), p);
}

/// Multiplies every digit by the scalar s in F_p.
inline std::uint64_t digit_scale(std::uint64_t a, std::uint32_t s, std::uint32_t p) noexcept {
  if (s == 0) return 0;
  if (s == 1) return a;
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  while (a != 0) {
    out += (a % p) * s % p * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace hooleyff::detail
