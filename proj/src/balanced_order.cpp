#include "projgap/balanced_order.hpp"

#include <algorithm>

#include "projgap/checked.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

namespace projgap {

namespace {

void require_in_X(const Point& x, const char* op) {
  if (!x.all_nonnegative() || !x.has_zero())
    throw domain_error(std::string(op) + ": " + x.to_string() + " is not in X_n");
}

// Balanced comparison without membership checks.
std::strong_ordering balanced_unchecked(const Point& x, const Point& y) {
  coord_t x_max = -1, y_max = -1;
  std::size_t x_arg = 0, y_arg = 0;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x[k] == y[k]) continue;
    if (x[k] >= x_max) x_max = x[k], x_arg = k;
    if (y[k] >= y_max) y_max = y[k], y_arg = k;
  }
  if (x_max != y_max) return x_max <=> y_max;
  return x_arg <=> y_arg;
}

// Smallest M with (M+1)^n - M^n >= m, i.e. the box [0,M]^n holds at least m
// points of X_n. Every point of X_n with maximum > M comes after all of them.
coord_t segment_box_bound(std::size_t n, std::int64_t m) {
  if (n == 1) {
    if (m > 1) throw domain_error("X_1 has a single point; no initial segment of size " +
                                  std::to_string(m));
    return 0;
  }
  coord_t big_m = 0;
  while (a_n_size(n, big_m + 1) < m) ++big_m;
  return big_m;
}

}  // namespace

ComparisonKey comparison_key(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw domain_error("comparison_key: dimension mismatch");
  ComparisonKey key;
  key.x_max = key.y_max = -1;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x[k] == y[k]) continue;
    key.disagreement.push_back(k + 1);
    key.x_restricted.push_back(x[k]);
    key.y_restricted.push_back(y[k]);
    if (x[k] >= key.x_max) key.x_max = x[k], key.x_argmax = k + 1;
    if (y[k] >= key.y_max) key.y_max = y[k], key.y_argmax = k + 1;
  }
  if (key.disagreement.empty()) key.x_max = key.y_max = 0;
  return key;
}

std::strong_ordering compare_balanced(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw domain_error("compare_balanced: dimension mismatch");
  require_in_X(x, "compare_balanced");
  require_in_X(y, "compare_balanced");
  return balanced_unchecked(x, y);
}

std::strong_ordering compare_positive(const Point& u, const Point& v, std::size_t axis) {
  if (u.dim() != v.dim()) throw domain_error("compare_positive: dimension mismatch");
  if (axis < 1 || axis > u.dim() + 1)
    throw domain_error("compare_positive: axis " + std::to_string(axis) + " out of range");
  if (!u.all_positive() || !v.all_positive())
    throw domain_error("compare_positive: coordinates must be strictly positive");
  return balanced_unchecked(u.insert(axis, 0), v.insert(axis, 0));
}

std::vector<Point> box_in_X(std::size_t n, coord_t bound) {
  std::vector<Point> out;
  if (n == 0 || bound < 0) return out;
  Point x = Point::zeros(n);
  while (true) {
    if (x.has_zero()) out.push_back(x);
    std::size_t k = n;
    while (k > 0 && x[k - 1] == bound) x[--k] = 0;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

std::vector<Point> initial_segment_sequence(std::size_t n, std::int64_t m, const PointOrder& order) {
  if (n < 1) throw domain_error("initial_segment: dimension must be at least 1");
  if (m < 0) throw domain_error("initial_segment: negative size");
  if (m == 0) return {};
  std::vector<Point> box = box_in_X(n, segment_box_bound(n, m));
  auto less = [&](const Point& a, const Point& b) {
    return (order ? order(a, b) : balanced_unchecked(a, b)) < 0;
  };
  auto mid = box.begin() + static_cast<std::ptrdiff_t>(m);
  std::partial_sort(box.begin(), mid, box.end(), less);
  box.erase(mid, box.end());
  return box;
}

PointSet initial_segment(std::size_t n, std::int64_t m, const PointOrder& order) {
  return PointSet(n, initial_segment_sequence(n, m, order));
}

std::vector<Point> positive_prefix(std::size_t d, std::int64_t k, std::size_t axis) {
  if (d < 1) throw domain_error("positive_prefix: dimension must be at least 1");
  if (axis < 1 || axis > d + 1) throw domain_error("positive_prefix: axis out of range");
  if (k < 0) throw domain_error("positive_prefix: negative count");
  if (k == 0) return {};
  // The induced order also refines the maximum, so [1,M]^d with M^d >= k suffices.
  coord_t big_m = 1;
  while (checked::pow(big_m, static_cast<int>(d), "positive box size") < k) ++big_m;
  std::vector<Point> box;
  Point u(std::vector<coord_t>(d, 1));
  while (true) {
    box.push_back(u);
    std::size_t j = d;
    while (j > 0 && u[j - 1] == big_m) u[--j] = 1;
    if (j == 0) break;
    ++u[j - 1];
  }
  auto mid = box.begin() + static_cast<std::ptrdiff_t>(k);
  std::partial_sort(box.begin(), mid, box.end(), [axis](const Point& a, const Point& b) {
    return balanced_unchecked(a.insert(axis, 0), b.insert(axis, 0)) < 0;
  });
  box.erase(mid, box.end());
  return box;
}

std::int64_t rank(const Point& x) {
  if (x.dim() < 1) throw domain_error("rank: empty point");
  require_in_X(x, "rank");
  std::int64_t r = 0;
  for (const Point& y : box_in_X(x.dim(), x.max()))
    if (balanced_unchecked(y, x) < 0) ++r;
  return r;
}

bool is_initial_segment(const PointSet& a) {
  if (!is_subset_of_X(a)) throw domain_error("is_initial_segment: set is not contained in X_n");
  if (a.empty()) return true;
  return a == initial_segment(a.dim(), static_cast<std::int64_t>(a.size()));
}

}  // namespace projgap
