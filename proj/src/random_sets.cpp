#include "projgap/random_sets.hpp"

#include <algorithm>
#include <unordered_set>

namespace projgap {

namespace {

Point random_point(Rng& rng, std::size_t n, coord_t lo, coord_t hi) {
  std::uniform_int_distribution<coord_t> coord(lo, hi);
  Point p = Point::zeros(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = coord(rng);
  return p;
}

bool strictly_below(const Point& x, const Point& y) {
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (!(x[k] < y[k])) return false;
  return true;
}

}  // namespace

PointSet random_weak_antichain(Rng& rng, std::size_t n, std::size_t max_size, coord_t lo, coord_t hi) {
  std::vector<Point> pts;
  for (std::size_t attempt = 0; attempt < max_size; ++attempt) {
    Point p = random_point(rng, n, lo, hi);
    const bool ok = std::none_of(pts.begin(), pts.end(), [&](const Point& q) {
      return q == p || strictly_below(q, p) || strictly_below(p, q);
    });
    if (ok) pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

PointSet random_nonnegative_set(Rng& rng, std::size_t n, std::size_t size, coord_t hi) {
  std::vector<Point> pts;
  for (std::size_t attempt = 0; attempt < size; ++attempt) {
    Point p = random_point(rng, n, 0, hi);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

PointSet random_subset_of_X(Rng& rng, std::size_t n, std::size_t size, coord_t hi) {
  std::uniform_int_distribution<std::size_t> axis(0, n - 1);
  std::vector<Point> pts;
  for (std::size_t attempt = 0; attempt < size; ++attempt) {
    Point p = random_point(rng, n, 0, hi);
    p[axis(rng)] = 0;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

PointSet random_downset_in_X(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Point> pts;
  std::unordered_set<Point, PointHash> members;
  if (size == 0) return PointSet(n);
  pts.push_back(Point::zeros(n));
  members.insert(pts.back());
  while (pts.size() < size) {
    std::vector<Point> addable;
    std::unordered_set<Point, PointHash> seen;
    for (const Point& e : pts) {
      for (std::size_t j = 0; j < n; ++j) {
        Point y = e;
        ++y[j];
        if (!y.has_zero() || members.count(y) || !seen.insert(y).second) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (y[k] == 0) continue;
          Point pred = y;
          --pred[k];
          ok = members.count(pred) > 0;
        }
        if (ok) addable.push_back(std::move(y));
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    Point chosen = addable[pick(rng)];
    members.insert(chosen);
    pts.push_back(std::move(chosen));
  }
  return PointSet(n, std::move(pts));
}

}  // namespace projgap
