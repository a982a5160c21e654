#include <doctest.h>

#include <algorithm>
#include <random>

#include "projgap/balanced_order.hpp"
#include "projgap/compressions.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

using namespace projgap;

namespace {

// Literal reading of the definition: build x', y' over T, take their maxima,
// then the largest position in T attaining each maximum.
bool oracle_less(const Point& x, const Point& y) {
  std::vector<std::size_t> t;
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (x[k] != y[k]) t.push_back(k);
  if (t.empty()) return false;
  std::vector<coord_t> xr, yr;
  for (std::size_t k : t) xr.push_back(x[k]), yr.push_back(y[k]);
  const coord_t mx = *std::max_element(xr.begin(), xr.end());
  const coord_t my = *std::max_element(yr.begin(), yr.end());
  if (mx != my) return mx < my;
  std::size_t ix = 0, iy = 0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (xr[p] == mx) ix = p;
    if (yr[p] == my) iy = p;
  }
  return ix < iy;
}

// All of X_n inside [0, big]^n sorted by the oracle; `big` is chosen large
// enough by the caller, independently of the library's box bound.
std::vector<Point> oracle_order(std::size_t n, coord_t big) {
  std::vector<Point> pts;
  Point x = Point::zeros(n);
  while (true) {
    if (x.has_zero()) pts.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == big) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  std::stable_sort(pts.begin(), pts.end(), oracle_less);
  return pts;
}

Point random_in_X(std::mt19937_64& rng, std::size_t n, coord_t hi) {
  std::uniform_int_distribution<coord_t> c(0, hi);
  std::uniform_int_distribution<std::size_t> z(0, n - 1);
  Point p = Point::zeros(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = c(rng);
  p[z(rng)] = 0;
  return p;
}

}  // namespace

TEST_CASE("comparison key") {
  const ComparisonKey k = comparison_key(Point{1, 0, 2}, Point{1, 3, 0});
  CHECK(k.disagreement == std::vector<std::size_t>{2, 3});
  CHECK(k.x_restricted == std::vector<coord_t>{0, 2});
  CHECK(k.y_restricted == std::vector<coord_t>{3, 0});
  CHECK(k.x_max == 2);
  CHECK(k.x_argmax == 3);
  CHECK(k.y_max == 3);
  CHECK(k.y_argmax == 2);
  CHECK(comparison_key(Point{0, 4}, Point{0, 4}).disagreement.empty());
}

TEST_CASE("compare_balanced examples") {
  CHECK(compare_balanced(Point{1, 0}, Point{0, 1}) < 0);
  CHECK(compare_balanced(Point{0, 5, 2}, Point{0, 5, 2}) == 0);
  CHECK(compare_balanced(Point{2, 0}, Point{0, 1}) > 0);
  CHECK_THROWS_AS(compare_balanced(Point{1, 1}, Point{0, 0}), domain_error);
  CHECK_THROWS_AS(compare_balanced(Point{0, 1}, Point{0, 0, 0}), domain_error);
  CHECK_THROWS_AS(compare_balanced(Point{-1, 0}, Point{0, 0}), domain_error);
}

TEST_CASE("compare_balanced matches the literal definition") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int c = 0; c < 5000; ++c) {
      const Point x = random_in_X(rng, n, 5), y = random_in_X(rng, n, 5);
      CHECK((compare_balanced(x, y) < 0) == oracle_less(x, y));
    }
}

TEST_CASE("balanced order is a total order refining the maximum") {
  std::mt19937_64 rng(2);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 10000; ++c) {
      const Point x = random_in_X(rng, n, 4), y = random_in_X(rng, n, 4), z = random_in_X(rng, n, 4);
      const auto xy = compare_balanced(x, y);
      CHECK((xy == 0) == (x == y));
      CHECK((xy < 0) == (compare_balanced(y, x) > 0));
      if (xy < 0 && compare_balanced(y, z) < 0) CHECK(compare_balanced(x, z) < 0);
      if (x.max() < y.max()) CHECK(xy < 0);
    }
}

TEST_CASE("compare_positive") {
  CHECK(compare_positive(Point{1, 1}, Point{2, 1}, 3) < 0);
  CHECK(compare_positive(Point{2, 1}, Point{1, 2}, 3) < 0);
  CHECK(compare_positive(Point{3, 2}, Point{3, 2}, 1) == 0);
  CHECK_THROWS_AS(compare_positive(Point{0, 1}, Point{1, 1}, 1), domain_error);
  CHECK_THROWS_AS(compare_positive(Point{1, 1}, Point{1, 1}, 4), domain_error);

  // Against an embedding built by hand, for every insertion axis.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<coord_t> c(1, 5);
  for (std::size_t d = 1; d <= 3; ++d)
    for (int rep = 0; rep < 2000; ++rep) {
      Point u = Point::zeros(d), v = Point::zeros(d);
      for (std::size_t k = 0; k < d; ++k) u[k] = c(rng), v[k] = c(rng);
      for (std::size_t axis = 1; axis <= d + 1; ++axis) {
        std::vector<coord_t> eu(u.begin(), u.end()), ev(v.begin(), v.end());
        eu.insert(eu.begin() + static_cast<long>(axis - 1), 0);
        ev.insert(ev.begin() + static_cast<long>(axis - 1), 0);
        CHECK((compare_positive(u, v, axis) < 0) == oracle_less(Point(eu), Point(ev)));
      }
    }
}

TEST_CASE("initial_segment examples") {
  CHECK(initial_segment(2, 3) == PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}));
  const std::vector<Point> seq = initial_segment_sequence(3, 7);
  const std::vector<Point> expected{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{1, 1, 0},
                                    Point{0, 0, 1}, Point{1, 0, 1}, Point{0, 1, 1}};
  CHECK(seq == expected);
  CHECK(initial_segment(3, 7) == construct_A_N(3, 2));
  CHECK(initial_segment(4, 0).empty());
  CHECK(initial_segment(1, 1) == PointSet(1, {Point{0}}));
  CHECK_THROWS_AS(initial_segment(1, 2), domain_error);
  CHECK_THROWS_AS(initial_segment(2, -1), domain_error);
}

TEST_CASE("initial segments agree with an independently sorted large box") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const coord_t big = n == 2 ? 30 : n == 3 ? 9 : 5;
    const std::vector<Point> reference = oracle_order(n, big);
    // Only prefixes whose points all have max < big are trustworthy in the reference.
    std::size_t safe = 0;
    while (safe < reference.size() && reference[safe].max() < big) ++safe;
    for (std::size_t m : {std::size_t{1}, std::size_t{5}, std::size_t{17}, safe / 2, safe}) {
      const auto seq = initial_segment_sequence(n, static_cast<std::int64_t>(m));
      CHECK(std::equal(seq.begin(), seq.end(), reference.begin(), reference.begin() + m));
    }
  }
}

TEST_CASE("initial segments are down-sets and coincide with A_N") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::int64_t m = 0; m <= 60; ++m) {
      const PointSet s = initial_segment(n, m);
      CHECK(is_subset_of_X(s));
      CHECK(is_down_set(s));
    }
    for (std::int64_t big_n = 1; big_n <= 5; ++big_n)
      CHECK(initial_segment(n, a_n_size(n, big_n)) == construct_A_N(n, big_n));
  }
}

TEST_CASE("rank") {
  CHECK(rank(Point{0, 0}) == 0);
  CHECK(rank(Point{0, 1}) == 2);
  CHECK(rank(Point{0, 0, 1}) == 4);
  CHECK_THROWS_AS(rank(Point{1, 1}), domain_error);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto seq = initial_segment_sequence(n, 40);
    for (std::size_t r = 0; r < seq.size(); ++r) {
      CHECK(rank(seq[r]) == static_cast<std::int64_t>(r));
      const auto prefix = initial_segment_sequence(n, static_cast<std::int64_t>(r + 1));
      CHECK(prefix.back() == seq[r]);
    }
  }
}

TEST_CASE("is_initial_segment") {
  CHECK(is_initial_segment(construct_A_N(3, 2)));
  CHECK_FALSE(is_initial_segment(PointSet(2, {Point{0, 0}, Point{0, 1}})));
  CHECK(is_initial_segment(PointSet(3)));
  CHECK_THROWS_AS(is_initial_segment(PointSet(2, {Point{1, 1}})), domain_error);
}

TEST_CASE("positive prefix matches sorting a generous box") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t axis = 1; axis <= d + 1; ++axis) {
      std::vector<Point> box;
      const coord_t big = d == 1 ? 40 : d == 2 ? 12 : 6;
      Point u(std::vector<coord_t>(d, 1));
      while (true) {
        box.push_back(u);
        std::size_t j = 0;
        while (j < d && u[j] == big) u[j++] = 1;
        if (j == d) break;
        ++u[j];
      }
      std::sort(box.begin(), box.end(),
                [axis](const Point& a, const Point& b) { return compare_positive(a, b, axis) < 0; });
      for (std::int64_t k : {0, 1, 4, 9, 30}) {
        const auto pre = positive_prefix(d, k, axis);
        CHECK(std::equal(pre.begin(), pre.end(), box.begin(), box.begin() + k));
      }
    }
}

TEST_CASE("prefixes of the induced positive order stay inside S of an initial segment") {
  // If u precedes v and v is in S(I) for an initial segment I of X_2, so is u.
  const std::size_t d = 2;
  for (std::int64_t m = 0; m <= 30; ++m) {
    const PointSet seg = initial_segment(d, m);
    const PointSet s = compute_S(seg);
    for (std::size_t axis = 1; axis <= d + 1; ++axis) {
      const auto order = positive_prefix(d, 49, axis);
      bool seen_outside = false;
      for (const Point& u : order) {
        if (!s.contains(u))
          seen_outside = true;
        else
          CHECK_FALSE(seen_outside);
      }
    }
  }
}
