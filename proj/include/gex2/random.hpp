#pragma once

// Random forms and basis changes for the randomized sweeps.

#include <cstdint>
#include <random>

#include "gex2/quadform.hpp"

namespace gex2 {

inline QuadraticForm random_form(int dim, std::mt19937_64& rng) {
  std::vector<std::uint64_t> upper(dim, 0);
  const std::uint64_t mask = dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
  for (int i = 0; i + 1 < dim; ++i) upper[i] = rng() & mask & ~((std::uint64_t{2} << i) - 1);
  return QuadraticForm(dim, rng() & mask, std::move(upper));
}

inline BitVector random_vector(int dim, std::mt19937_64& rng) { return BitVector(dim, rng()); }

/// Rejection sampling; a random square matrix over F_2 is invertible with
/// probability above 0.28.
inline BitMatrix random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const BitVector row = random_vector(n, rng);
      for (int j : row.support()) m.set(i, j, true);
    }
    if (is_invertible(m)) return m;
  }
}

}  // namespace gex2
