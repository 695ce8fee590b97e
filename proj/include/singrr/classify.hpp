#pragma once

// Enumeration of the possible baskets at a crepant centre.
//
// Stage J: multisets of (r, v) with r >= 2v and sum B(r, v) = 1, the i = 0
// slice of the difference equation. Stage J~: every coprime choice of b over
// a stage-J multiset, kept when the full difference equation holds.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "singrr/basket.hpp"
#include "singrr/rational.hpp"
#include "singrr/rr_core.hpp"

namespace singrr {

/// One (r, v) pair of a stage-J multiset.
struct JPair {
  std::int64_t r = 0;
  std::int64_t v = 0;

  friend bool operator==(const JPair&, const JPair&) = default;
  friend auto operator<=>(const JPair&, const JPair&) = default;
};

using JPairs = std::vector<JPair>;

/// "(r,v)"
inline std::string to_string(const JPair& p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.v) + ")";
}

inline std::string to_string(const JPairs& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ';';
    out += to_string(p);
  }
  return out;
}

/// (r, v) projection of a basket, in canonical order.
inline JPairs project(const Basket& basket) {
  JPairs out;
  for (const auto& e : basket) out.push_back({e.r(), e.v()});
  return out;
}

inline Rational sum_b_values(const JPairs& pairs) {
  Rational total = 0;
  for (const auto& p : pairs) total += b_value(p.r, p.v);
  return total;
}

/// Label used for rows missing from the reference tables.
inline constexpr const char* kUnexpectedLabel = "UNEXPECTED";

/// One row of a classification table. `basket` is set for stage J~ rows only.
struct ClassificationRow {
  std::string label;
  JPairs pairs;
  std::optional<Basket> basket;
  std::int64_t r_p = 1;
  /// Stage J: sum B(r, v) = 1 (or empty). Stage J~: verify_delta is consistent.
  bool verified = false;

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

namespace golden {

struct Table1Row {
  int label;
  JPairs pairs;
  std::int64_t r_p;
};

struct Table2Row {
  int label;
  /// (r, v, b) triples.
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> entries;
  std::int64_t r_p;
};

/// The 13 published stage-J types, in published order.
inline const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {1, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}, 2},
      {2, {{2, 1}, {2, 1}, {4, 2}}, 4},
      {3, {{2, 1}, {3, 1}, {6, 1}}, 6},
      {4, {{2, 1}, {4, 1}, {4, 1}}, 4},
      {5, {{3, 1}, {3, 1}, {3, 1}}, 3},
      {6, {{4, 2}, {4, 2}}, 4},
      {7, {{2, 1}, {6, 3}}, 6},
      {8, {{2, 1}, {8, 2}}, 8},
      {9, {{3, 1}, {6, 2}}, 6},
      {10, {{5, 1}, {5, 2}}, 5},
      {11, {{8, 4}}, 8},
      {12, {{9, 3}}, 9},
      {13, {}, 1},
  };
  return rows;
}

/// The 6 published stage-J~ types, in published order.
inline const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {1, {{2, 1, 1}, {2, 1, 1}, {2, 1, 1}, {2, 1, 1}}, 2},
      {3, {{2, 1, 1}, {3, 1, 2}, {6, 1, 5}}, 6},
      {4, {{2, 1, 1}, {4, 1, 3}, {4, 1, 3}}, 4},
      {5, {{3, 1, 2}, {3, 1, 2}, {3, 1, 2}}, 3},
      {10, {{5, 1, 4}, {5, 2, 3}}, 5},
      {13, {}, 1},
  };
  return rows;
}

inline Basket basket_of(const Table2Row& row) {
  std::vector<BasketEntry> entries;
  for (const auto& [r, v, b] : row.entries) entries.emplace_back(r, b, v);
  return Basket(std::move(entries));
}

}  // namespace golden

/// The candidate multisets of v values.
///
/// For r >= 2v, B(r, v) = v/2 - v^2/2r lies in [v/4, v/2). Summing to 1 then
/// forces 2 < sum v <= 4, and each entry contributes at least 1 to the sum.
/// Returns every multiset of positive integers with sum in that range, each
/// sorted ascending, ordered by (sum, contents).
inline std::vector<std::vector<std::int64_t>> candidate_v_multisets() {
  constexpr std::int64_t max_sum = 4;            // sum v/4 <= 1
  constexpr std::int64_t min_sum_exclusive = 2;  // sum v/2 > 1

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> parts;
  // Partitions of `left` into parts >= `smallest`, emitted ascending.
  auto partitions = [&](auto&& self, std::int64_t left, std::int64_t smallest) -> void {
    if (left == 0) {
      out.push_back(parts);
      return;
    }
    for (std::int64_t p = smallest; p <= left; ++p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  for (std::int64_t total = min_sum_exclusive + 1; total <= max_sum; ++total) {
    const std::size_t first = out.size();
    partitions(partitions, total, 1);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

namespace detail {

inline BigInt floor_div(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (q * denominator(x) > numerator(x)) --q;
  return q;
}

inline BigInt ceil_div(const Rational& x) { return -floor_div(-x); }

}  // namespace detail

/// All multisets {(r_k, v_k)} over the given v values with r_k >= 2 v_k and
/// sum B(r_k, v_k) = 1, in canonical order.
///
/// Works with the equivalent integer form sum v_k^2 / r_k = sum v_k - 2 and
/// picks entries in order of non-increasing term x = v^2 / r. With target t
/// left and k entries to place, the next term is the largest of the k, so
/// t/k <= x, and x < t unless it is the last one (then x = t). Every solution
/// sorted by decreasing term is a path of this search, so the search is
/// complete; tied terms can produce the same multiset twice and are merged.
inline std::vector<JPairs> solve_r(const std::vector<std::int64_t>& vs) {
  if (vs.empty()) throw std::invalid_argument("solve_r: empty v multiset");
  std::map<std::int64_t, int> remaining;
  std::int64_t target_int = -2;
  for (auto v : vs) {
    if (v < 1) throw std::invalid_argument("solve_r: v values must be positive");
    ++remaining[v];
    target_int += v;
  }
  std::set<JPairs> found;
  if (target_int <= 0) return {};

  JPairs chosen;
  auto search = [&](auto&& self, const Rational& target, std::optional<Rational> prev_term,
                    int left) -> void {
    if (left == 0) {
      JPairs sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      found.insert(std::move(sorted));
      return;
    }
    for (auto& [v, count] : remaining) {
      if (count == 0) continue;
      const BigInt v2 = BigInt(v) * v;
      BigInt lo = 2 * v;
      BigInt hi;
      if (left == 1) {
        // x = t exactly.
        const Rational r_exact = Rational(v2) / target;
        if (denominator(r_exact) != 1) continue;
        lo = std::max(lo, numerator(r_exact));
        hi = numerator(r_exact);
      } else {
        lo = std::max(lo, detail::floor_div(Rational(v2) / target) + 1);
        hi = detail::floor_div(Rational(v2 * left) / target);
      }
      if (prev_term) lo = std::max(lo, detail::ceil_div(Rational(v2) / *prev_term));
      for (BigInt r = lo; r <= hi; ++r) {
        const Rational term = Rational(v2) / Rational(r);
        --count;
        chosen.push_back({static_cast<std::int64_t>(r), v});
        self(self, target - term, term, left - 1);
        chosen.pop_back();
        ++count;
      }
    }
  };
  search(search, Rational(target_int), std::nullopt, static_cast<int>(vs.size()));
  return {found.begin(), found.end()};
}

namespace detail {

inline std::string table1_label(const JPairs& pairs) {
  for (const auto& row : golden::table1())
    if (row.pairs == pairs) return std::to_string(row.label);
  return kUnexpectedLabel;
}

inline std::string table2_label(const Basket& basket) {
  for (const auto& row : golden::table2())
    if (golden::basket_of(row) == basket) return std::to_string(row.label);
  return kUnexpectedLabel;
}

// Published rows first in label order, then unexpected rows by content.
inline void sort_rows(std::vector<ClassificationRow>& rows) {
  auto rank = [](const ClassificationRow& row) {
    return row.label == kUnexpectedLabel ? std::numeric_limits<int>::max() : std::stoi(row.label);
  };
  std::sort(rows.begin(), rows.end(), [&](const ClassificationRow& x, const ClassificationRow& y) {
    return std::tuple(rank(x), x.pairs, x.basket) < std::tuple(rank(y), y.pairs, y.basket);
  });
}

}  // namespace detail

/// Stage J: the empty type plus solve_r over every candidate v multiset.
inline std::vector<ClassificationRow> enumerate_table1() {
  std::set<JPairs> all{JPairs{}};
  for (const auto& vs : candidate_v_multisets())
    for (auto& pairs : solve_r(vs)) all.insert(std::move(pairs));

  std::vector<ClassificationRow> rows;
  for (const auto& pairs : all) {
    std::int64_t r_p = 1;
    for (const auto& p : pairs) r_p = checked_mul(r_p / std::gcd(r_p, p.r), p.r);
    rows.push_back({detail::table1_label(pairs), pairs, std::nullopt, r_p,
                    pairs.empty() || sum_b_values(pairs) == 1});
  }
  detail::sort_rows(rows);
  return rows;
}

/// Every basket obtained from `pairs` by choosing b coprime to r per entry,
/// with permutations of equal (r, v) entries identified.
inline std::set<Basket> b_assignments(const JPairs& pairs) {
  std::set<Basket> out;
  std::vector<BasketEntry> entries;
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      out.insert(Basket(entries));
      return;
    }
    for (std::int64_t b = 1; b < pairs[k].r; ++b) {
      if (std::gcd(b, pairs[k].r) != 1) continue;
      entries.emplace_back(pairs[k].r, b, pairs[k].v);
      self(self, k + 1);
      entries.pop_back();
    }
  };
  assign(assign, 0);
  return out;
}

/// Stage J~: the b refinements of enumerate_table1() passing verify_delta.
inline std::vector<ClassificationRow> refine_to_table2() {
  std::vector<ClassificationRow> rows;
  for (const auto& parent : enumerate_table1()) {
    for (const auto& basket : b_assignments(parent.pairs)) {
      if (!verify_delta(basket).consistent()) continue;
      rows.push_back({detail::table2_label(basket), parent.pairs, basket, lcm_index(basket), true});
    }
  }
  detail::sort_rows(rows);
  return rows;
}

/// Largest r_P over the rows. Throws std::invalid_argument on empty input.
inline std::int64_t max_index(const std::vector<ClassificationRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("max_index: no rows");
  return std::max_element(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
           return x.r_p < y.r_p;
         })->r_p;
}

// Brute-force oracle. Shares nothing with the structured search above except
// b_value and verify_delta.
namespace oracle {

/// Every multiset of at most four (r, v) pairs, 2 <= r <= r_max and
/// 1 <= v <= r/2, with sum B(r, v) = 1, plus the empty multiset.
///
/// At most four entries because each B(r, v) >= 1/4. B is positive, so a
/// partial sum above 1 cannot be completed and is cut.
inline std::set<JPairs> enumerate_pairs(std::int64_t r_max) {
  if (r_max < 2) throw std::invalid_argument("oracle: r_max must be >= 2");
  std::vector<JPair> universe;
  std::vector<Rational> weight;
  for (std::int64_t r = 2; r <= r_max; ++r)
    for (std::int64_t v = 1; 2 * v <= r; ++v) {
      universe.push_back({r, v});
      weight.push_back(b_value(r, v));
    }

  std::set<JPairs> out{JPairs{}};
  JPairs current;
  auto walk = [&](auto&& self, std::size_t from, const Rational& sum) -> void {
    if (sum == 1) out.insert(current);
    if (current.size() == 4) return;
    for (std::size_t k = from; k < universe.size(); ++k) {
      Rational next = sum + weight[k];
      if (next > 1) continue;
      current.push_back(universe[k]);
      self(self, k, next);
      current.pop_back();
    }
  };
  walk(walk, 0, Rational(0));
  return out;
}

/// Every basket of at most four entries with 2 <= r <= r_max that passes
/// verify_delta.
///
/// At i = 0 the difference equation reads -1 = -sum B(r, v) for a non-empty
/// basket, independent of b, so b choices are only tried over the multisets
/// from enumerate_pairs.
inline std::set<Basket> enumerate(std::int64_t r_max) {
  std::set<Basket> out;
  for (const auto& pairs : enumerate_pairs(r_max)) {
    std::vector<BasketEntry> entries;
    auto assign = [&](auto&& self, std::size_t k) -> void {
      if (k == pairs.size()) {
        Basket basket(entries);
        if (verify_delta(basket).consistent()) out.insert(std::move(basket));
        return;
      }
      for (std::int64_t b = 1; b < pairs[k].r; ++b) {
        if (std::gcd(b, pairs[k].r) != 1) continue;
        entries.emplace_back(pairs[k].r, b, pairs[k].v);
        self(self, k + 1);
        entries.pop_back();
      }
    };
    assign(assign, 0);
  }
  return out;
}

}  // namespace oracle

/// Brute-force stage J~ baskets up to r_max; see oracle::enumerate.
inline std::set<Basket> oracle_enumerate(std::int64_t r_max) { return oracle::enumerate(r_max); }

}  // namespace singrr
