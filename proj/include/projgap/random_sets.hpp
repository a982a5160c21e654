#pragma once

#include <cstdint>
#include <random>

#include "projgap/point.hpp"

namespace projgap {

using Rng = std::mt19937_64;

// Random points of [lo, hi]^n kept only when they stay incomparable with what
// was already accepted; up to `max_size` attempts.
PointSet random_weak_antichain(Rng& rng, std::size_t n, std::size_t max_size, coord_t lo, coord_t hi);

// Up to `size` distinct points of [0, hi]^n.
PointSet random_nonnegative_set(Rng& rng, std::size_t n, std::size_t size, coord_t hi);

// Up to `size` distinct points of [0, hi]^n with a zero coordinate.
PointSet random_subset_of_X(Rng& rng, std::size_t n, std::size_t size, coord_t hi);

// Grown from the origin by adding uniformly chosen addable points.
PointSet random_downset_in_X(Rng& rng, std::size_t n, std::size_t size);

}  // namespace projgap
