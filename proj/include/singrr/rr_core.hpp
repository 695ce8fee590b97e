#pragma once

// Local Riemann-Roch contributions of terminal cyclic quotient
// singularities of type 1/r(1,-1,b).

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

#include "singrr/rational.hpp"

namespace singrr {

/// Residue of i modulo r in [0, r), using floor division so that negative i
/// lands in range: residue(-1, 6) == 5.
inline std::int64_t residue(std::int64_t i, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("residue: modulus must be >= 1, got " + std::to_string(r));
  std::int64_t m = i % r;
  return m < 0 ? m + r : m;
}

/// i * j, throwing std::overflow_error instead of wrapping.
inline std::int64_t checked_mul(std::int64_t i, std::int64_t j) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(i, j, &out)) throw std::overflow_error("integer overflow in product");
  return out;
}

inline std::int64_t checked_sub(std::int64_t i, std::int64_t j) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(i, j, &out)) throw std::overflow_error("integer overflow in difference");
  return out;
}

/// A fictitious singularity 1/r(1,-1,b): r >= 2, 1 <= b < r, gcd(b, r) = 1.
class CyclicQuotient {
 public:
  CyclicQuotient(std::int64_t r, std::int64_t b) : r_(r), b_(b) {
    if (r < 2) throw std::invalid_argument("cyclic quotient: r must be >= 2, got " + std::to_string(r));
    if (b < 1 || b >= r)
      throw std::invalid_argument("cyclic quotient: b must lie in [1, r), got b=" + std::to_string(b) +
                                  " r=" + std::to_string(r));
    if (std::gcd(b, r) != 1)
      throw std::invalid_argument("cyclic quotient: gcd(b, r) must be 1, got b=" + std::to_string(b) +
                                  " r=" + std::to_string(r));
  }

  std::int64_t r() const noexcept { return r_; }
  std::int64_t b() const noexcept { return b_; }

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  std::int64_t r_;
  std::int64_t b_;
};

/// B(i) = res(i)(r - res(i)) / 2r, with res the residue modulo r. Lies in [0, r/8].
inline Rational b_value(std::int64_t r, std::int64_t i) {
  if (r < 2) throw std::invalid_argument("b_value: r must be >= 2, got " + std::to_string(r));
  const std::int64_t m = residue(i, r);
  return make_rational(BigInt(m) * (r - m), BigInt(2) * r);
}

/// The constant (r^2 - 1) / 12r by which A drops at each step, up to a B term.
inline Rational a_step_constant(std::int64_t r) {
  return make_rational(BigInt(r) * r - 1, BigInt(12) * r);
}

/// A(i) = -res(i)(r^2-1)/12r + sum_{j=1}^{res(i)-1} res(jb)(r - res(jb)) / 2r.
///
/// Depends on i only through res(i). For res(i) <= 1 the sum is empty.
inline Rational a_value(const CyclicQuotient& q, std::int64_t i) {
  const std::int64_t r = q.r();
  const std::int64_t top = residue(i, r);
  // Accumulate the sum's numerator over the common denominator 2r.
  BigInt sum = 0;
  for (std::int64_t j = 1; j <= top - 1; ++j) {
    const std::int64_t m = residue(checked_mul(j, q.b()), r);
    sum += BigInt(m) * (r - m);
  }
  return -Rational(top) * a_step_constant(r) + make_rational(sum, BigInt(2) * r);
}

/// Contribution c_P(D) of the singularity q to chi(O(D)) when D ~ i_P K near q.
inline Rational c_contribution(const CyclicQuotient& q, std::int64_t i_p) { return a_value(q, i_p); }

/// Sum of c_contribution over a basket of fictitious singularities.
inline Rational basket_c_contribution(std::span<const CyclicQuotient> qs, std::int64_t i_p) {
  Rational total = 0;
  for (const auto& q : qs) total += c_contribution(q, i_p);
  return total;
}

}  // namespace singrr
