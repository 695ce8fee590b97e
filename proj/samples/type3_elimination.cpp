// Walks through the b choices for the stage-J shape (2,1),(3,1),(6,1) and
// shows which ones survive the difference equation.

#include <iostream>

#include "singrr/basket.hpp"

int main() {
  using namespace singrr;
  for (std::int64_t b2 : {1, 2}) {
    for (std::int64_t b3 : {1, 5}) {
      const Basket basket({{2, 1, 1}, {3, b2, 1}, {6, b3, 1}});
      const auto verdict = verify_delta(basket);
      std::cout << to_string(basket) << "  rhs(1) = " << to_string(delta_diff_rhs(basket, 1)) << "  ";
      if (verdict.consistent()) {
        std::cout << "consistent, gamma = " << to_string(solve_gamma(basket).gamma) << "\n";
      } else {
        std::cout << "fails at i = " << verdict.witness->i << "\n";
      }
    }
  }
}
