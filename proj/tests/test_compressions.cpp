#include <doctest.h>

#include "projgap/balanced_order.hpp"
#include "projgap/compressions.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"
#include "projgap/random_sets.hpp"
#include "projgap/search.hpp"

using namespace projgap;

namespace {

// S(A) by scanning the box [1, max_k + 1] in every coordinate.
PointSet oracle_S(const PointSet& a) {
  const std::size_t n = a.dim();
  if (a.empty()) return PointSet(n);
  const Point hi = a.max_corner();
  std::vector<Point> out;
  Point x(std::vector<coord_t>(n, 1));
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      Point z = x;
      z[k] = 0;
      ok = a.contains(z);
    }
    if (ok) out.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi[k] + 1) x[k++] = 1;
    if (k == n) break;
    ++x[k];
  }
  return PointSet(n, out);
}

}  // namespace

TEST_CASE("bottom_layer") {
  const PointSet a(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}});
  CHECK(bottom_layer(a, 1) == PointSet(2, {Point{0, 0}, Point{0, 1}}));
  const PointSet single(3, {Point{4, -2, 9}});
  for (std::size_t i = 1; i <= 3; ++i) CHECK(bottom_layer(single, i) == single);
  CHECK_THROWS_AS(bottom_layer(a, 3), domain_error);

  Rng rng(1);
  for (int c = 0; c < 300; ++c) {
    const PointSet d = random_downset_in_X(rng, 3, 12);
    for (std::size_t i = 1; i <= 3; ++i) {
      std::vector<Point> zeros;
      for (const Point& x : d)
        if (x[i - 1] == 0) zeros.push_back(x);
      CHECK(bottom_layer(d, i) == PointSet(3, zeros));
    }
  }
}

TEST_CASE("layer_decomposition") {
  LayerDecomposition d = layer_decomposition(PointSet(2, {Point{0, 0}, Point{1, 0}}));
  CHECK(d.layers[0] == PointSet(2, {Point{0, 0}}));
  CHECK(d.layers[1] == PointSet(2, {Point{1, 0}}));
  CHECK(d.decomposable());

  d = layer_decomposition(PointSet(2, {Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}}));
  CHECK(d.layers[0] == PointSet(2, {Point{0, 0}, Point{0, 1}}));
  CHECK(d.layers[1] == PointSet(2, {Point{1, 0}}));
  CHECK(d.remainder == PointSet(2, {Point{1, 1}}));
  CHECK_FALSE(d.decomposable());

  d = layer_decomposition(PointSet(3));
  CHECK(d.layers.size() == 3);
  for (const PointSet& l : d.layers) CHECK(l.empty());
  CHECK(d.remainder.empty());

  Rng rng(2);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet a = random_weak_antichain(rng, n, 12, -3, 3);
      const LayerDecomposition ld = layer_decomposition(a);
      CHECK(ld.decomposable());
      std::size_t total = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(project(ld.layers[k - 1], k).size() == ld.layers[k - 1].size());
        total += ld.layers[k - 1].size();
      }
      CHECK(total == a.size());
    }
}

TEST_CASE("i_compress") {
  CHECK(i_compress(PointSet(2, {Point{1, 0}, Point{0, 1}, Point{1, 1}}), 1) ==
        PointSet(2, {Point{0, 0}, Point{0, 1}, Point{1, 1}}));
  CHECK_THROWS_AS(i_compress(PointSet(2, {Point{-1, 0}}), 1), domain_error);

  Rng rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet a = random_nonnegative_set(rng, n, 12, 4);
      for (std::size_t i = 1; i <= n; ++i) {
        const PointSet b = i_compress(a, i);
        CHECK(b.size() == a.size());
        CHECK(is_i_compressed(b, i));
        CHECK(i_compress(b, i) == b);
      }
    }
}

TEST_CASE("is_i_compressed") {
  CHECK(is_i_compressed(PointSet(2, {Point{0, 0}, Point{0, 1}}), 1));
  CHECK_FALSE(is_i_compressed(PointSet(2, {Point{1, 0}}), 1));
}

TEST_CASE("complete_compress") {
  CHECK(complete_compress(PointSet(2, {Point{2, 0}, Point{5, 0}, Point{0, 1}}), 1) ==
        PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}));
  Rng rng(4);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet d = random_downset_in_X(rng, n, 15);
      for (std::size_t i = 1; i <= n; ++i) CHECK(complete_compress(d, i) == d);

      const PointSet a = random_subset_of_X(rng, n, 12, 5);
      for (std::size_t i = 1; i <= n; ++i) {
        const PointSet b = complete_compress(a, i);
        CHECK(b.size() == a.size());
        CHECK(is_subset_of_X(b));
        for (std::size_t j = 1; j <= n; ++j) CHECK(project(b, j).size() <= project(a, j).size());
        if (b != a) CHECK(b.coordinate_sum() < a.coordinate_sum());
      }
    }
}

TEST_CASE("reduce_to_downset") {
  CHECK(reduce_to_downset(PointSet(2, {Point{3, 5}, Point{7, 2}})) ==
        PointSet(2, {Point{0, 0}, Point{0, 1}}));
  CHECK(reduce_to_downset(construct_A_N(3, 3)) == construct_A_N(3, 3));
  CHECK(reduce_to_downset(PointSet(3)).empty());
  CHECK_THROWS_AS(reduce_to_downset(PointSet(2, {Point{0, 0}, Point{1, 1}})), domain_error);

  Rng rng(5);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet d = random_downset_in_X(rng, n, 14);
      CHECK(reduce_to_downset(d) == d);

      const PointSet a = random_weak_antichain(rng, n, 14, -4, 4);
      const PointSet r = reduce_to_downset(a);
      CHECK(r.size() == a.size());
      CHECK(is_subset_of_X(r));
      CHECK(is_down_set(r));
      for (std::size_t j = 1; j <= n; ++j) CHECK(project(r, j).size() <= project(a, j).size());
    }
}

TEST_CASE("slice_decomposition") {
  const PointSet a(3, {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{1, 1, 0}, Point{0, 0, 1}});
  const SliceDecomposition s = slice_decomposition(a, 3);
  REQUIRE(s.layers.size() == 2);
  CHECK(s.layers[0] == PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}));
  CHECK(s.layers[1] == PointSet(2, {Point{0, 0}}));
  CHECK(s.block == PointSet(2, {Point{1, 1}}));
  CHECK(reassemble(s) == a);

  const SliceDecomposition t = slice_decomposition(PointSet(2, {Point{0, 0}}), 2);
  REQUIRE(t.layers.size() == 1);
  CHECK(t.layers[0] == PointSet(1, {Point{0}}));
  CHECK(t.block.empty());

  CHECK_THROWS_AS(slice_decomposition(PointSet(2, {Point{0, 1}}), 1), domain_error);
  CHECK_THROWS_AS(slice_decomposition(PointSet(2, {Point{1, 1}, Point{0, 0}}), 1), domain_error);

  Rng rng(6);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet d = random_downset_in_X(rng, n, 16);
      for (std::size_t i = 1; i <= n; ++i) {
        const SliceDecomposition sd = slice_decomposition(d, i);
        CHECK(reassemble(sd) == d);
        std::size_t total = sd.block.size();
        for (std::size_t a_ = 0; a_ < sd.layers.size(); ++a_) {
          total += sd.layers[a_].size();
          for (const Point& p : sd.layers[a_]) CHECK(p.has_zero());
          if (a_ > 0) CHECK(sd.layers[a_].subset_of(sd.layers[a_ - 1]));
        }
        for (const Point& p : sd.block) CHECK(p.all_positive());
        CHECK(total == d.size());
      }
    }
}

TEST_CASE("balanced_compress") {
  const PointSet a(3, {Point{0, 0, 0}, Point{0, 1, 0}, Point{0, 2, 0}});
  CHECK(balanced_compress(a, 3) == PointSet(3, {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}}));
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::int64_t m = 0; m <= 50; ++m) {
      const PointSet seg = initial_segment(n, m);
      for (std::size_t i = 1; i <= n; ++i) CHECK(balanced_compress(seg, i) == seg);
    }
    for (std::int64_t big_n = 1; big_n <= 3; ++big_n)
      for (std::size_t i = 1; i <= n; ++i)
        CHECK(balanced_compress(construct_A_N(n, big_n), i) == construct_A_N(n, big_n));
  }
  CHECK_THROWS_AS(balanced_compress(PointSet(2, {Point{0, 1}}), 1), domain_error);

  Rng rng(7);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet d = random_downset_in_X(rng, n, 14);
      const auto s_before = compute_S(d).size();
      const auto g_before = gap(d).gap;
      for (std::size_t i = 1; i <= n; ++i) {
        const PointSet b = balanced_compress(d, i);
        CHECK(b.size() == d.size());
        CHECK(is_subset_of_X(b));
        CHECK(is_down_set(b));
        CHECK(compute_S(b).size() >= s_before);
        CHECK(gap(b).gap <= g_before);
      }
    }
}

TEST_CASE("compute_S") {
  CHECK(compute_S(PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}})) == PointSet(2, {Point{1, 1}}));
  CHECK(compute_S(PointSet(2, {Point{0, 0}, Point{1, 0}})).empty());
  CHECK(compute_S(construct_A_N(3, 2)) == PointSet(3, {Point{1, 1, 1}}));
  CHECK(compute_S(PointSet(3)).empty());
  CHECK_THROWS_AS(compute_S(PointSet(2, {Point{1, 1}})), domain_error);

  Rng rng(8);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int c = 0; c < 300; ++c) {
      const PointSet d = random_downset_in_X(rng, n, 16);
      CHECK(compute_S(d) == oracle_S(d));
      const PointSet x = random_subset_of_X(rng, n, 20, 3);
      CHECK(compute_S(x) == oracle_S(x));
    }
}

TEST_CASE("fixed points of every balanced compression have the structural property") {
  // x < y, x outside A, y inside A  =>  x has exactly one zero, and a shared
  // coordinate x_j = y_j forces x_j = y_j = 0 with a second zero in y.
  std::size_t fixed = 0;
  for (std::int64_t m = 0; m <= 9; ++m) {
    for_each_downset(3, m, [&](const PointSet& a) {
      for (std::size_t i = 1; i <= 3; ++i)
        if (balanced_compress(a, i) != a) return;
      ++fixed;
      for (const Point& y : a)
        for (const Point& x : box_in_X(3, y.max())) {
          if (a.contains(x) || !(compare_balanced(x, y) < 0)) continue;
          CHECK(x.zero_count() == 1);
          for (std::size_t j = 0; j < 3; ++j)
            if (x[j] == y[j]) {
              CHECK(x[j] == 0);
              CHECK(y.zero_count() >= 2);
            }
        }
    });
  }
  CHECK(fixed >= 10);
}
