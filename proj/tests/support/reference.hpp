#pragma once

// Test-only reference implementations, written straight from the definitions
// without sharing code paths with the library.

#include <cstdint>
#include <random>
#include <vector>

#include "singrr/rational.hpp"

namespace singrr::reference {

// Residue by repeated addition/subtraction.
inline std::int64_t slow_residue(std::int64_t i, std::int64_t r) {
  while (i < 0) i += r;
  while (i >= r) i -= r;
  return i;
}

inline Rational slow_b(std::int64_t r, std::int64_t i) {
  const std::int64_t m = slow_residue(i, r);
  return Rational(m * (r - m)) / Rational(2 * r);
}

// A(i) with every term kept as a separate fraction.
inline Rational slow_a(std::int64_t r, std::int64_t b, std::int64_t i) {
  const std::int64_t top = slow_residue(i, r);
  Rational total = Rational(-top) * Rational(r * r - 1) / Rational(12 * r);
  for (std::int64_t j = 1; j < top; ++j) total += slow_b(r, j * b);
  return total;
}

// Smallest f >= 1 with f*b = v mod r, by scanning.
inline std::int64_t scan_f(std::int64_t r, std::int64_t b, std::int64_t v) {
  for (std::int64_t f = 1; f < r; ++f)
    if (slow_residue(f * b, r) == v) return f;
  return -1;
}

inline std::int64_t scan_lcm(const std::vector<std::int64_t>& rs) {
  for (std::int64_t m = 1;; ++m) {
    bool all = true;
    for (auto r : rs) all = all && m % r == 0;
    if (all) return m;
  }
}

inline std::int64_t gcd_loop(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Random r in [2, r_max] and a unit b modulo r.
inline std::pair<std::int64_t, std::int64_t> random_quotient(std::mt19937_64& rng, std::int64_t r_max) {
  std::uniform_int_distribution<std::int64_t> pick_r(2, r_max);
  const std::int64_t r = pick_r(rng);
  std::uniform_int_distribution<std::int64_t> pick_b(1, r - 1);
  for (;;) {
    const std::int64_t b = pick_b(rng);
    if (gcd_loop(b, r) == 1) return {r, b};
  }
}

}  // namespace singrr::reference
