#pragma once

#include <hksym/matrix.hpp>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace testing {

// HKSYM_SEED overrides the fixed default so failures can be replayed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("HKSYM_SEED")) return std::stoull(s);
  return 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline hksym::IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  hksym::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(-bound, bound);
  return m;
}

// Product of random elementary matrices; determinant +-1 by construction.
inline hksym::IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  hksym::IntMatrix u = hksym::IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_row(i, j, hksym::Integer(uniform(-2, 2)));
    if (uniform(0, 5) == 0) u.swap_rows(i, j);
  }
  return u;
}

}  // namespace testing
