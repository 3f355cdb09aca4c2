#pragma once

#include <vector>

namespace cml {

struct Convergent {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const Convergent& a, const Convergent& b) {
    return a.p == b.p && a.q == b.q;
  }
};

/// First `count` continued-fraction convergents p/q of x > 0. Stops early
/// when the float expansion is exhausted (exact rational input, or a partial
/// quotient beyond double precision), so fewer than `count` entries may come
/// back. Every returned convergent satisfies |x - p/q| < 1/q^2.
std::vector<Convergent> convergents(double x, int count);

}  // namespace cml
