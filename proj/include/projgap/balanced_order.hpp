#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "projgap/point.hpp"

namespace projgap {

// The data the balanced order looks at when comparing x and y: the axes T on
// which they disagree, the restrictions x', y' to T, and for each side the
// largest restricted value and the largest axis (1-based) attaining it.
struct ComparisonKey {
  std::vector<std::size_t> disagreement;
  std::vector<coord_t> x_restricted;
  std::vector<coord_t> y_restricted;
  coord_t x_max = 0;
  coord_t y_max = 0;
  std::size_t x_argmax = 0;
  std::size_t y_argmax = 0;
};

ComparisonKey comparison_key(const Point& x, const Point& y);

// Total order on X_n: compare max x' against max y', then the last axis
// attaining it. Both points must be in X_n with equal dimension.
std::strong_ordering compare_balanced(const Point& x, const Point& y);

// Order on Z_{>0}^{n-1} induced by inserting a zero at `axis` (1-based, 1..n)
// and comparing in the balanced order on X_n.
std::strong_ordering compare_positive(const Point& u, const Point& v, std::size_t axis);

using PointOrder = std::function<std::strong_ordering(const Point&, const Point&)>;

// The first m points of X_n in the balanced order (or `order`, which must be a
// total order on X_n refining the maximum coordinate; tests swap in broken
// orders to check that verification notices). n = 1 is accepted: X_1 = {(0)}.
PointSet initial_segment(std::size_t n, std::int64_t m, const PointOrder& order = {});

// Same, as a vector in increasing order.
std::vector<Point> initial_segment_sequence(std::size_t n, std::int64_t m,
                                            const PointOrder& order = {});

// The first k points of Z_{>0}^d under compare_positive(., ., axis), d >= 1.
std::vector<Point> positive_prefix(std::size_t d, std::int64_t k, std::size_t axis);

// Number of points of X_n strictly below x (0-based position).
std::int64_t rank(const Point& x);

// A equals the initial segment of its own size.
bool is_initial_segment(const PointSet& a);

// Points of [0, bound]^n with a zero coordinate, in lexicographic order.
std::vector<Point> box_in_X(std::size_t n, coord_t bound);

}  // namespace projgap
