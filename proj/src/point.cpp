#include "projgap/point.hpp"

#include <algorithm>
#include <numeric>

#include "projgap/checked.hpp"
#include "projgap/errors.hpp"

namespace projgap {

coord_t Point::max() const {
  if (coords_.empty()) throw domain_error("max of a 0-dimensional point");
  return *std::max_element(coords_.begin(), coords_.end());
}

coord_t Point::sum() const {
  coord_t s = 0;
  for (coord_t c : coords_) s = checked::add(s, c, "coordinate sum");
  return s;
}

bool Point::has_zero() const {
  return std::find(coords_.begin(), coords_.end(), 0) != coords_.end();
}

std::size_t Point::zero_count() const {
  return static_cast<std::size_t>(std::count(coords_.begin(), coords_.end(), 0));
}

bool Point::all_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](coord_t c) { return c >= 0; });
}

bool Point::all_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](coord_t c) { return c > 0; });
}

Point Point::drop(std::size_t axis) const {
  if (axis < 1 || axis > dim()) throw domain_error("axis " + std::to_string(axis) + " out of range");
  std::vector<coord_t> out;
  out.reserve(dim() - 1);
  for (std::size_t k = 0; k < dim(); ++k)
    if (k + 1 != axis) out.push_back(coords_[k]);
  return Point(std::move(out));
}

Point Point::insert(std::size_t axis, coord_t value) const {
  if (axis < 1 || axis > dim() + 1)
    throw domain_error("insertion axis " + std::to_string(axis) + " out of range");
  std::vector<coord_t> out(coords_);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(axis - 1), value);
  return Point(std::move(out));
}

Point Point::with(std::size_t axis, coord_t value) const {
  if (axis < 1 || axis > dim()) throw domain_error("axis " + std::to_string(axis) + " out of range");
  Point out(*this);
  out.coords_[axis - 1] = value;
  return out;
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < dim(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (coord_t c : p) {
    h ^= std::hash<coord_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  for (const Point& p : points_)
    if (p.dim() != dim_)
      throw domain_error("point " + p.to_string() + " does not have dimension " + std::to_string(dim_));
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw domain_error("duplicate point " + dup->to_string());
}

PointSet PointSet::collapse(std::size_t dim, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return PointSet(dim, std::move(points));
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Point PointSet::min_corner() const {
  if (empty()) throw domain_error("min_corner of an empty set");
  Point lo = points_.front();
  for (const Point& p : points_)
    for (std::size_t k = 0; k < dim_; ++k) lo[k] = std::min(lo[k], p[k]);
  return lo;
}

Point PointSet::max_corner() const {
  if (empty()) throw domain_error("max_corner of an empty set");
  Point hi = points_.front();
  for (const Point& p : points_)
    for (std::size_t k = 0; k < dim_; ++k) hi[k] = std::max(hi[k], p[k]);
  return hi;
}

coord_t PointSet::coordinate_sum() const {
  coord_t s = 0;
  for (const Point& p : points_) s = checked::add(s, p.sum(), "coordinate sum");
  return s;
}

bool PointSet::subset_of(const PointSet& other) const {
  return dim_ == other.dim_ &&
         std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

PointSet disjoint_union(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw domain_error("union of sets with different dimensions");
  std::vector<Point> all(a.points());
  all.insert(all.end(), b.begin(), b.end());
  return PointSet(a.dim(), std::move(all));
}

}  // namespace projgap
