#pragma once

// Baskets of fictitious singularities carrying the twist datum v, the
// delta-profile check and the constant-term solver.
//
// Both sides of the difference equation
//   delta(i+1) - delta(i) = sum_Q B_Q(i b_Q) - B_Q(i b_Q - v_Q)
// are periodic in i with period dividing L = lcm r_Q (delta has period L, each
// B_Q has period r_Q | L), so checking i in [0, L) covers every integer i.
// The same holds for the undifferenced equation, whose A_Q terms are
// r_Q-periodic.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "singrr/rational.hpp"
#include "singrr/rr_core.hpp"

namespace singrr {

/// A fictitious singularity 1/r(1,-1,b) together with v = res(f b), where f is
/// the local class of the divisor F. Normalized so that 1 <= v <= r/2.
class BasketEntry {
 public:
  BasketEntry(std::int64_t r, std::int64_t b, std::int64_t v) : quotient_(r, b), v_(v) {
    if (v < 1 || 2 * v > r)
      throw std::invalid_argument("basket entry: v must lie in [1, r/2], got v=" + std::to_string(v) +
                                  " r=" + std::to_string(r));
  }

  std::int64_t r() const noexcept { return quotient_.r(); }
  std::int64_t b() const noexcept { return quotient_.b(); }
  std::int64_t v() const noexcept { return v_; }
  const CyclicQuotient& quotient() const noexcept { return quotient_; }

  /// Canonical key: (r, v, b).
  auto key() const noexcept { return std::tuple(r(), v(), b()); }

  friend bool operator==(const BasketEntry& x, const BasketEntry& y) { return x.key() == y.key(); }
  friend auto operator<=>(const BasketEntry& x, const BasketEntry& y) { return x.key() <=> y.key(); }

 private:
  CyclicQuotient quotient_;
  std::int64_t v_;
};

/// "(r,v,b)"
inline std::string to_string(const BasketEntry& e) {
  return "(" + std::to_string(e.r()) + "," + std::to_string(e.v()) + "," + std::to_string(e.b()) + ")";
}

/// A finite multiset of entries, kept sorted by (r, v, b).
class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<BasketEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
  }

  const std::vector<BasketEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Basket&, const Basket&) = default;
  friend auto operator<=>(const Basket& x, const Basket& y) {
    return std::lexicographical_compare_three_way(x.entries_.begin(), x.entries_.end(), y.entries_.begin(),
                                                  y.entries_.end());
  }

 private:
  std::vector<BasketEntry> entries_;
};

/// "(r,v,b);(r,v,b)", empty string for the empty basket.
inline std::string to_string(const Basket& basket) {
  std::string out;
  for (const auto& e : basket) {
    if (!out.empty()) out += ';';
    out += to_string(e);
  }
  return out;
}

/// An entry as a user writes it, before normalization.
struct RawEntry {
  std::int64_t r = 0;
  std::int64_t b = 0;
  std::int64_t v = 0;
};

/// Builds a canonical basket from raw entries. Entries with v = 0 are dropped
/// (f = 0 there, so they do not contribute) and entries with v > r/2 are
/// replaced by (r, r-b, r-v); each such rewrite appends a line to `notices`.
/// Throws std::invalid_argument for r < 2, b outside [1, r), gcd(b, r) != 1, or
/// v outside [0, r).
inline Basket normalize_basket(const std::vector<RawEntry>& raw, std::vector<std::string>& notices) {
  std::vector<BasketEntry> entries;
  entries.reserve(raw.size());
  for (const auto& e : raw) {
    const std::string desc =
        "{r=" + std::to_string(e.r) + ", b=" + std::to_string(e.b) + ", v=" + std::to_string(e.v) + "}";
    if (e.r < 2) throw std::invalid_argument("entry " + desc + ": r must be >= 2");
    if (e.v < 0 || e.v >= e.r) throw std::invalid_argument("entry " + desc + ": v must lie in [0, r)");
    // Validates b before any rewrite.
    CyclicQuotient q(e.r, e.b);
    if (e.v == 0) {
      notices.push_back("dropped entry " + desc + ": v = 0 means f = 0, so it does not contribute");
      continue;
    }
    if (2 * e.v > e.r) {
      notices.push_back("normalized entry " + desc + " to {r=" + std::to_string(e.r) +
                        ", b=" + std::to_string(e.r - e.b) + ", v=" + std::to_string(e.r - e.v) + "}");
      entries.emplace_back(e.r, e.r - e.b, e.r - e.v);
    } else {
      entries.emplace_back(e.r, e.b, e.v);
    }
  }
  return Basket(std::move(entries));
}

/// delta(i) = 1 if r_P | i, else 0.
struct DeltaProfile {
  std::int64_t r_p = 1;

  int operator()(std::int64_t i) const { return residue(i, r_p) == 0 ? 1 : 0; }
};

/// Least common multiple of the entry indices; 1 for the empty basket.
inline std::int64_t lcm_index(const Basket& basket) {
  std::int64_t l = 1;
  for (const auto& e : basket) l = checked_mul(l / std::gcd(l, e.r()), e.r());
  return l;
}

/// Inverse of b modulo r, for gcd(b, r) = 1.
inline std::int64_t inverse_mod(std::int64_t b, std::int64_t r) {
  std::int64_t old_r = residue(b, r), cur_r = r;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: b is not a unit modulo r");
  return residue(old_s, r);
}

/// Smallest f >= 1 with res(f b) = v.
inline std::int64_t f_min(const BasketEntry& e) {
  return residue(checked_mul(e.v(), inverse_mod(e.b(), e.r())), e.r());
}

/// Right-hand side of the difference equation at i:
/// sum_Q B_Q(i b_Q) - B_Q(i b_Q - v_Q).
inline Rational delta_diff_rhs(const Basket& basket, std::int64_t i) {
  Rational total = 0;
  for (const auto& e : basket) {
    // res(i) b < r^2, so no overflow.
    const std::int64_t ib = residue(i, e.r()) * e.b();
    total += b_value(e.r(), ib) - b_value(e.r(), ib - e.v());
  }
  return total;
}

/// The first i at which an equation fails, with both sides.
struct EquationWitness {
  std::int64_t i = 0;
  Rational lhs;
  Rational rhs;
};

struct DeltaVerdict {
  std::optional<EquationWitness> witness;

  bool consistent() const noexcept { return !witness.has_value(); }
};

/// Checks delta(i+1) - delta(i) == delta_diff_rhs(basket, i) for i in [0, L),
/// L = lcm_index(basket). Reports the smallest failing i.
inline DeltaVerdict verify_delta(const Basket& basket) {
  const std::int64_t period = lcm_index(basket);
  const DeltaProfile delta{period};
  for (std::int64_t i = 0; i < period; ++i) {
    const Rational lhs(delta(i + 1) - delta(i));
    Rational rhs = delta_diff_rhs(basket, i);
    if (lhs != rhs) return {EquationWitness{i, lhs, std::move(rhs)}};
  }
  return {};
}

/// gamma + sum_Q A_Q(i) - A_Q(i - f_Q), the predicted value of delta(i).
inline Rational delta_from_contributions(const Basket& basket, const Rational& gamma, std::int64_t i) {
  Rational total = gamma;
  for (const auto& e : basket) {
    const std::int64_t f = f_min(e);
    total += a_value(e.quotient(), i) - a_value(e.quotient(), checked_sub(i, f));
  }
  return total;
}

struct GammaResult {
  /// The constant fixed by i = 0; only meaningful when consistent().
  Rational gamma;
  std::optional<EquationWitness> witness;

  bool consistent() const noexcept { return !witness.has_value(); }
};

/// Solves delta(i) = gamma + sum_Q A_Q(i) - A_Q(i - f_Q) for the single unknown
/// constant gamma (the intersection-number terms), using i = 0 to fix it and
/// i in [1, L) to check it.
inline GammaResult solve_gamma(const Basket& basket) {
  const std::int64_t period = lcm_index(basket);
  const DeltaProfile delta{period};
  GammaResult result{Rational(delta(0)) - delta_from_contributions(basket, Rational(0), 0), std::nullopt};
  for (std::int64_t i = 1; i < period; ++i) {
    const Rational lhs(delta(i));
    Rational rhs = delta_from_contributions(basket, result.gamma, i);
    if (lhs != rhs) {
      result.witness = EquationWitness{i, lhs, std::move(rhs)};
      break;
    }
  }
  return result;
}

}  // namespace singrr
