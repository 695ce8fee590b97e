#pragma once

#include <stdexcept>

#include "singrr/rational.hpp"

namespace singrr {

/// Upper bound on the index of a 3-fold canonical singularity with minimal
/// discrepancy `md`: 6 for md = 0, r! for md = 1/r, 1 for md = 2.
/// Throws std::invalid_argument for any other value.
inline BigInt index_bound_for_minimal_discrepancy(const Rational& md) {
  if (md == 0) return 6;
  if (md == 2) return 1;
  if (md > 0 && numerator(md) == 1) {
    BigInt factorial = 1;
    for (BigInt k = 2; k <= denominator(md); ++k) factorial *= k;
    return factorial;
  }
  throw std::invalid_argument("not a 3-fold canonical minimal discrepancy value: " + to_string(md) +
                              " (values are 0, 1/r, or 2)");
}

}  // namespace singrr
