#pragma once

#include "fig/linalg.hpp"
#include "fig/random.hpp"

namespace fig::testing {

inline Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols,
                            int density_percent = 60) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rng.chance(static_cast<std::uint64_t>(density_percent), 100))
        continue;
      if (field.is_prime())
        m.set(r, c, static_cast<long>(rng.below(field.characteristic())));
      else
        m.set(r, c, Scalar(rng.between(-5, 5), rng.between(1, 4)));
    }
  return m;
}

/// A matrix of prescribed rank at most `r`, as a product of thin factors.
inline Matrix random_low_rank(Rng& rng, const Field& field, std::size_t rows, std::size_t cols,
                              std::size_t r) {
  return random_matrix(rng, field, rows, r, 80) * random_matrix(rng, field, r, cols, 80);
}

inline Field random_field(Rng& rng) {
  static const std::uint32_t primes[] = {2, 3, 5, 7, 101};
  if (rng.chance(1, 4))
    return Field::rationals();
  return Field::prime(primes[rng.below(5)]);
}

}  // namespace fig::testing
