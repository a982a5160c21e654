#include "projgap/geometry.hpp"

#include <algorithm>

#include "projgap/checked.hpp"
#include "projgap/errors.hpp"

namespace projgap {

namespace {

void require_gap_dimension(const PointSet& a, const char* op) {
  if (a.dim() < 2) throw domain_error(std::string(op) + ": dimension must be at least 2");
}

}  // namespace

PointSet project(const PointSet& a, std::size_t axis) {
  require_gap_dimension(a, "project");
  if (axis < 1 || axis > a.dim())
    throw domain_error("project: axis " + std::to_string(axis) + " out of range 1.." +
                       std::to_string(a.dim()));
  std::vector<Point> images;
  images.reserve(a.size());
  for (const Point& x : a) images.push_back(x.drop(axis));
  return PointSet::collapse(a.dim() - 1, std::move(images));
}

GapReport gap(const PointSet& a) {
  require_gap_dimension(a, "gap");
  GapReport r;
  r.size = static_cast<std::int64_t>(a.size());
  std::int64_t total = 0;
  for (std::size_t i = 1; i <= a.dim(); ++i) {
    auto s = static_cast<std::int64_t>(project(a, i).size());
    r.projection_sizes.push_back(s);
    total += s;
  }
  r.gap = total - r.size;
  return r;
}

bool is_weak_antichain(const PointSet& a) {
  require_gap_dimension(a, "is_weak_antichain");
  const auto& pts = a.points();
  for (const Point& x : pts) {
    for (const Point& y : pts) {
      bool below = true;
      for (std::size_t k = 0; k < a.dim() && below; ++k) below = x[k] < y[k];
      if (below) return false;
    }
  }
  return true;
}

bool is_down_set(const PointSet& a) {
  for (const Point& y : a) {
    if (!y.all_nonnegative())
      throw domain_error("is_down_set: negative coordinate in " + y.to_string());
  }
  for (const Point& y : a) {
    Point x = y;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (y[k] == 0) continue;
      x[k] = y[k] - 1;
      if (!a.contains(x)) return false;
      x[k] = y[k];
    }
  }
  return true;
}

bool is_subset_of_X(const PointSet& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Point& x) { return x.all_nonnegative() && x.has_zero(); });
}

PointSet normalize_translate(const PointSet& a) {
  if (a.empty()) throw domain_error("normalize_translate: empty set");
  const Point lo = a.min_corner();
  std::vector<Point> out;
  out.reserve(a.size());
  for (const Point& x : a) {
    Point y = x;
    for (std::size_t k = 0; k < a.dim(); ++k) y[k] = checked::sub(x[k], lo[k], "translation");
    out.push_back(std::move(y));
  }
  return PointSet(a.dim(), std::move(out));
}

std::int64_t a_n_size(std::size_t n, std::int64_t big_n) {
  if (n < 1 || big_n < 1) throw domain_error("A_N needs n >= 1 and N >= 1");
  const int e = static_cast<int>(n);
  return checked::pow(big_n, e, "N^n") - checked::pow(big_n - 1, e, "(N-1)^n");
}

PointSet construct_A_N(std::size_t n, std::int64_t big_n) {
  if (n < 2) throw domain_error("construct_A_N: n must be at least 2");
  if (big_n < 1) throw domain_error("construct_A_N: N must be positive");
  const std::int64_t expected = a_n_size(n, big_n);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(expected));
  Point x = Point::zeros(n);
  // Odometer over [0, N-1]^n keeping points with a zero coordinate.
  while (true) {
    if (x.has_zero()) pts.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == big_n - 1) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return PointSet(n, std::move(pts));
}

LoomisWhitneyReport loomis_whitney_check(const PointSet& s) {
  if (s.dim() < 2) throw domain_error("loomis_whitney_check: dimension must be at least 2");
  LoomisWhitneyReport r;
  r.lhs = checked::pow(static_cast<std::int64_t>(s.size()), static_cast<int>(s.dim() - 1),
                       "Loomis-Whitney left side");
  r.rhs = 1;
  for (std::size_t i = 1; i <= s.dim(); ++i)
    r.rhs = checked::mul(r.rhs, static_cast<std::int64_t>(project(s, i).size()),
                         "Loomis-Whitney right side");
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace projgap
