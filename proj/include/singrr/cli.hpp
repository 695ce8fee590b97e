#pragma once

// Command-line front end. Exit codes: 0 success or consistent, 1 verification
// or oracle failure, 2 usage or parse error.

#include <fstream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "singrr/basket.hpp"
#include "singrr/classify.hpp"
#include "singrr/io.hpp"
#include "singrr/md_bound.hpp"
#include "singrr/rr_core.hpp"

namespace singrr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string describe(const EquationWitness& w) {
  return "i=" + std::to_string(w.i) + ": lhs = " + to_string(w.lhs) + ", rhs = " + to_string(w.rhs);
}

template <typename T>
std::string join(const std::set<T>& items) {
  std::string out;
  for (const auto& item : items) out += "  " + (to_string(item).empty() ? std::string("(empty)") : to_string(item)) + "\n";
  return out;
}

template <typename T>
std::set<T> minus(const std::set<T>& x, const std::set<T>& y) {
  std::set<T> out;
  for (const auto& item : x)
    if (!y.contains(item)) out.insert(item);
  return out;
}

// Compares the structured result against the oracle; reports to err.
template <typename T>
int compare_with_oracle(const std::set<T>& structured, const std::set<T>& oracle, std::int64_t r_max,
                        std::ostream& err) {
  if (structured == oracle) {
    err << "oracle: agreement on " << oracle.size() << " results (r_max=" << r_max << ")\n";
    return kExitOk;
  }
  err << "oracle: MISMATCH (r_max=" << r_max << ")\n";
  if (auto only = minus(structured, oracle); !only.empty()) err << "only in enumeration:\n" << join(only);
  if (auto only = minus(oracle, structured); !only.empty()) err << "only in oracle:\n" << join(only);
  return kExitFailed;
}

}  // namespace detail

/// Runs the CLI on argv, writing results to `out` (or the --output file) and
/// diagnostics to `err`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact singular Riemann-Roch contributions and basket classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_path;
  app.add_option("--output", output_path, "Write results to this file instead of stdout");

  std::int64_t contrib_r = 0, contrib_b = 0, contrib_i = 0;
  auto* contrib = app.add_subcommand("contrib", "Print A(i), B(i) and c(i) for 1/r(1,-1,b)");
  contrib->add_option("--r", contrib_r, "Index r >= 2")->required();
  contrib->add_option("--b", contrib_b, "Weight b, 1 <= b < r, coprime to r")->required();
  contrib->add_option("--i", contrib_i, "Twist i (any integer)")->required();

  std::string stage_text = "J";
  std::string format_text = "markdown";
  bool use_oracle = false;
  std::int64_t r_max = 16;
  auto* classify = app.add_subcommand("classify", "Emit a classification table");
  classify->add_option("--stage", stage_text, "J or Jtilde")
      ->check(CLI::IsMember({"J", "Jtilde"}))
      ->capture_default_str();
  classify->add_option("--format", format_text, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  classify->add_flag("--oracle", use_oracle, "Cross-check against the brute-force oracle");
  classify->add_option("--r-max", r_max, "Largest r tried by the oracle")->capture_default_str();

  std::string basket_path;
  auto* verify = app.add_subcommand("verify", "Check the difference equation for a basket file");
  verify->add_option("basket", basket_path, "Basket JSON file")->required();
  auto* index = app.add_subcommand("index", "Print the index lcm(r) of a basket file");
  index->add_option("basket", basket_path, "Basket JSON file")->required();
  auto* gamma = app.add_subcommand("gamma", "Solve for the constant term of a basket file");
  gamma->add_option("basket", basket_path, "Basket JSON file")->required();

  std::string md_text;
  auto* md_bound = app.add_subcommand("md-bound", "Index bound for a minimal discrepancy 0, 1/r or 2");
  md_bound->add_option("a", md_text, "Minimal discrepancy")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot write " << output_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file;

  auto load = [&](Basket& basket) {
    std::vector<std::string> notices;
    try {
      basket = read_basket_file(basket_path, notices);
    } catch (const BasketFormatError& e) {
      err << "error: " << basket_path << ": " << e.what() << "\n";
      return false;
    }
    for (const auto& n : notices) err << "note: " << n << "\n";
    return true;
  };

  try {
    if (*contrib) {
      CyclicQuotient q(contrib_r, contrib_b);
      sink << "A = " << to_string(a_value(q, contrib_i)) << ", B = " << to_string(b_value(q.r(), contrib_i))
           << ", c = " << to_string(c_contribution(q, contrib_i)) << "\n";
      return kExitOk;
    }

    if (*classify) {
      const Stage stage = stage_text == "J" ? Stage::J : Stage::JTilde;
      const OutputFormat format = format_text == "json"  ? OutputFormat::Json
                                  : format_text == "csv" ? OutputFormat::Csv
                                                         : OutputFormat::Markdown;
      if (use_oracle && r_max < 2) {
        err << "error: --r-max must be >= 2\n";
        return kExitUsage;
      }
      const auto rows = stage == Stage::J ? enumerate_table1() : refine_to_table2();
      sink << render_table(rows, stage, format);
      if (!use_oracle) return kExitOk;
      if (stage == Stage::J) {
        std::set<JPairs> structured;
        for (const auto& row : rows) structured.insert(row.pairs);
        return detail::compare_with_oracle(structured, oracle::enumerate_pairs(r_max), r_max, err);
      }
      std::set<Basket> structured;
      for (const auto& row : rows) structured.insert(*row.basket);
      return detail::compare_with_oracle(structured, oracle_enumerate(r_max), r_max, err);
    }

    if (*verify) {
      Basket basket;
      if (!load(basket)) return kExitUsage;
      const auto verdict = verify_delta(basket);
      if (verdict.consistent()) {
        sink << "consistent (period " << lcm_index(basket) << ")\n";
        return kExitOk;
      }
      sink << "inconsistent at " << detail::describe(*verdict.witness) << "\n";
      return kExitFailed;
    }

    if (*index) {
      Basket basket;
      if (!load(basket)) return kExitUsage;
      sink << lcm_index(basket) << "\n";
      return kExitOk;
    }

    if (*gamma) {
      Basket basket;
      if (!load(basket)) return kExitUsage;
      const auto result = solve_gamma(basket);
      if (result.consistent()) {
        sink << to_string(result.gamma) << "\n";
        return kExitOk;
      }
      sink << "inconsistent at " << detail::describe(*result.witness) << "\n";
      return kExitFailed;
    }

    if (*md_bound) {
      Rational md;
      try {
        md = parse_rational(md_text);
        sink << index_bound_for_minimal_discrepancy(md) << "\n";
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace singrr::cli
