#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace octo {

// A canonical residue mod p, always kept in [0, p).
using residue = std::uint32_t;

// The prime field F_p for an odd prime p, 3 <= p < 2^31.
// Primality is checked by trial division at construction; all arithmetic
// is exact on canonical residues.
class FieldPrime {
public:
  explicit FieldPrime(std::uint32_t p) : p_(p) {
    if (p < 3 || (p & 1u) == 0 || !is_prime(p)) {
      throw std::invalid_argument("FieldPrime: " + std::to_string(p) +
                                  " is not an odd prime");
    }
  }

  std::uint32_t p() const noexcept { return p_; }

  residue add(residue a, residue b) const noexcept {
    const std::uint32_t s = a + b;  // p < 2^31, no overflow
    return s >= p_ ? s - p_ : s;
  }

  residue sub(residue a, residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }

  residue neg(residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

  residue mul(residue a, residue b) const noexcept {
    return static_cast<residue>((std::uint64_t{a} * b) % p_);
  }

  // Multiplicative inverse by extended Euclid. Inverting 0 is a domain error.
  residue inv(residue a) const {
    if (a == 0) throw std::domain_error("FieldPrime::inv: 0 has no inverse");
    std::int64_t t = 0, next_t = 1;
    std::int64_t r = p_, next_r = a;
    while (next_r != 0) {
      const std::int64_t q = r / next_r;
      t = std::exchange(next_t, t - q * next_t);
      r = std::exchange(next_r, r - q * next_r);
    }
    // r == 1 here: p prime, a nonzero
    return static_cast<residue>(t < 0 ? t + p_ : t);
  }

  residue pow(residue a, std::uint64_t e) const noexcept {
    residue acc = 1, base = a;
    while (e != 0) {
      if (e & 1u) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  // Canonical residue of an arbitrary signed integer.
  residue from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<residue>(r);
  }

  friend bool operator==(const FieldPrime&, const FieldPrime&) = default;

private:
  static bool is_prime(std::uint32_t n) noexcept {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return n >= 2;
  }

  std::uint32_t p_;
};

}  // namespace octo
