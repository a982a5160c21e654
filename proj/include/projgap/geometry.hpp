#pragma once

#include <cstdint>
#include <vector>

#include "projgap/point.hpp"

namespace projgap {

// Sizes of the n coordinate projections of a set and the resulting gap
// sum_i |pi_i(A)| - |A|.
struct GapReport {
  std::int64_t size = 0;
  std::vector<std::int64_t> projection_sizes;
  std::int64_t gap = 0;
};

struct LoomisWhitneyReport {
  std::int64_t lhs = 0;  // |S|^(d-1)
  std::int64_t rhs = 0;  // prod_i |pi_i(S)|
  bool holds = false;
};

// pi_axis(A): drop coordinate `axis` (1-based) of every point and merge images.
// Requires dimension >= 2.
PointSet project(const PointSet& a, std::size_t axis);

GapReport gap(const PointSet& a);

// No x, y in A with x_k < y_k for every k. Requires dimension >= 2.
bool is_weak_antichain(const PointSet& a);

// Closed under coordinatewise decrease within Z_{>=0}^n; checks the n
// single-step predecessors of each point. Negative coordinates are rejected.
bool is_down_set(const PointSet& a);

// Every point is nonnegative with at least one zero coordinate.
bool is_subset_of_X(const PointSet& a);

// Shift so that every coordinate has minimum 0.
PointSet normalize_translate(const PointSet& a);

// {x in [0,N-1]^n : x_j = 0 for some j}; size N^n - (N-1)^n.
PointSet construct_A_N(std::size_t n, std::int64_t big_n);

// N^n - (N-1)^n with overflow checking.
std::int64_t a_n_size(std::size_t n, std::int64_t big_n);

LoomisWhitneyReport loomis_whitney_check(const PointSet& s);

}  // namespace projgap
