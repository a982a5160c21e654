#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace projgap {

using coord_t = std::int64_t;

// An integer vector in Z^n. Coordinates are stored 0-based; public operations
// that take an axis use 1-based axis numbers.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<coord_t> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<coord_t> coords) : coords_(coords) {}

  static Point zeros(std::size_t dim) { return Point(std::vector<coord_t>(dim, 0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  coord_t operator[](std::size_t k) const { return coords_[k]; }
  coord_t& operator[](std::size_t k) { return coords_[k]; }
  std::span<const coord_t> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  coord_t max() const;
  coord_t sum() const;
  bool has_zero() const;
  std::size_t zero_count() const;
  bool all_nonnegative() const;
  bool all_positive() const;

  // Drops coordinate `axis` (1-based).
  Point drop(std::size_t axis) const;
  // Inserts `value` so that it becomes coordinate `axis` (1-based) of the result.
  Point insert(std::size_t axis, coord_t value) const;
  Point with(std::size_t axis, coord_t value) const;

  std::string to_string() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<coord_t> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

// A finite duplicate-free set of points of one dimension, kept in lexicographic order.
class PointSet {
 public:
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  // Throws domain_error on a dimension mismatch or a repeated point.
  PointSet(std::size_t dim, std::vector<Point> points);
  PointSet(std::size_t dim, std::initializer_list<Point> points)
      : PointSet(dim, std::vector<Point>(points)) {}

  // Collapses repeated points. Use only where images may legitimately coincide
  // (projections, set unions); everywhere else repeats are a bug.
  static PointSet collapse(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const Point& p) const;

  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  // Per-coordinate minimum and maximum. Empty sets have no bounds.
  Point min_corner() const;
  Point max_corner() const;
  coord_t coordinate_sum() const;

  bool subset_of(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

// Union of two disjoint sets of the same dimension; shared points are an error.
PointSet disjoint_union(const PointSet& a, const PointSet& b);

}  // namespace projgap
