#include "projgap/compressions.hpp"

#include <map>
#include <stdexcept>

#include "projgap/balanced_order.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

namespace projgap {

namespace {

void require_axis(const PointSet& a, std::size_t axis, const char* op) {
  if (axis < 1 || axis > a.dim())
    throw domain_error(std::string(op) + ": axis " + std::to_string(axis) + " out of range 1.." +
                       std::to_string(a.dim()));
}

void require_nonnegative(const PointSet& a, const char* op) {
  for (const Point& x : a)
    if (!x.all_nonnegative())
      throw domain_error(std::string(op) + ": negative coordinate in " + x.to_string());
}

void require_downset_in_X(const PointSet& a, const char* op) {
  if (a.dim() < 2) throw domain_error(std::string(op) + ": dimension must be at least 2");
  if (!is_subset_of_X(a)) throw domain_error(std::string(op) + ": set is not contained in X_n");
  if (!is_down_set(a)) throw domain_error(std::string(op) + ": set is not a down-set");
}

// pi_axis-fibers keyed by the remaining coordinates, ascending. Points inside a
// fiber come out in increasing axis coordinate because A is lexicographically sorted.
std::map<Point, std::vector<Point>> fibers(const PointSet& a, std::size_t axis) {
  std::map<Point, std::vector<Point>> out;
  for (const Point& x : a) out[x.drop(axis)].push_back(x);
  return out;
}

}  // namespace

PointSet bottom_layer(const PointSet& a, std::size_t axis) {
  require_axis(a, axis, "bottom_layer");
  std::vector<Point> out;
  for (auto& [key, column] : fibers(a, axis)) out.push_back(column.front());
  return PointSet(a.dim(), std::move(out));
}

LayerDecomposition layer_decomposition(const PointSet& a) {
  LayerDecomposition d;
  std::vector<Point> rest(a.begin(), a.end());
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    PointSet layer = bottom_layer(PointSet(a.dim(), rest), k);
    std::erase_if(rest, [&](const Point& x) { return layer.contains(x); });
    d.layers.push_back(std::move(layer));
  }
  d.remainder = PointSet(a.dim(), std::move(rest));
  return d;
}

PointSet i_compress(const PointSet& a, std::size_t axis) {
  require_axis(a, axis, "i_compress");
  require_nonnegative(a, "i_compress");
  std::vector<Point> out;
  out.reserve(a.size());
  for (auto& [key, column] : fibers(a, axis)) {
    out.push_back(column.front().with(axis, 0));
    out.insert(out.end(), column.begin() + 1, column.end());
  }
  return PointSet(a.dim(), std::move(out));
}

bool is_i_compressed(const PointSet& a, std::size_t axis) {
  require_axis(a, axis, "is_i_compressed");
  require_nonnegative(a, "is_i_compressed");
  for (auto& [key, column] : fibers(a, axis))
    if (column.front()[axis - 1] != 0) return false;
  return true;
}

PointSet complete_compress(const PointSet& a, std::size_t axis) {
  require_axis(a, axis, "complete_compress");
  require_nonnegative(a, "complete_compress");
  std::vector<Point> out;
  out.reserve(a.size());
  for (auto& [key, column] : fibers(a, axis))
    for (std::size_t h = 0; h < column.size(); ++h)
      out.push_back(key.insert(axis, static_cast<coord_t>(h)));
  return PointSet(a.dim(), std::move(out));
}

PointSet reduce_to_downset(const PointSet& a) {
  if (a.dim() < 2) throw domain_error("reduce_to_downset: dimension must be at least 2");
  if (!is_weak_antichain(a)) throw domain_error("reduce_to_downset: input is not a weak antichain");
  if (a.empty()) return a;

  PointSet cur = normalize_translate(a);
  for (std::size_t i = 1; i <= a.dim(); ++i) cur = i_compress(cur, i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i <= a.dim(); ++i) {
      PointSet next = complete_compress(cur, i);
      if (next != cur) {
        changed = true;
        cur = std::move(next);
      }
    }
  }
  if (!is_subset_of_X(cur) || !is_down_set(cur))
    throw std::logic_error("reduce_to_downset: result is not a down-set in X_n");
  return cur;
}

SliceDecomposition slice_decomposition(const PointSet& a, std::size_t axis) {
  require_downset_in_X(a, "slice_decomposition");
  require_axis(a, axis, "slice_decomposition");
  const std::size_t sub = a.dim() - 1;
  std::vector<std::vector<Point>> layers;
  std::vector<Point> block;
  for (const Point& x : a) {
    const coord_t level = x[axis - 1];
    Point rest = x.drop(axis);
    if (rest.has_zero()) {
      if (layers.size() <= static_cast<std::size_t>(level)) layers.resize(level + 1);
      layers[level].push_back(std::move(rest));
    } else {
      block.push_back(std::move(rest));
    }
  }
  SliceDecomposition s;
  s.axis = axis;
  for (auto& layer : layers) s.layers.emplace_back(sub, std::move(layer));
  s.block = PointSet(sub, std::move(block));
  return s;
}

PointSet reassemble(const SliceDecomposition& slices) {
  const std::size_t n = slices.block.dim() + 1;
  std::vector<Point> out;
  for (std::size_t level = 0; level < slices.layers.size(); ++level)
    for (const Point& r : slices.layers[level])
      out.push_back(r.insert(slices.axis, static_cast<coord_t>(level)));
  for (const Point& r : slices.block) out.push_back(r.insert(slices.axis, 0));
  return PointSet(n, std::move(out));
}

PointSet balanced_compress(const PointSet& a, std::size_t axis) {
  SliceDecomposition s = slice_decomposition(a, axis);
  const std::size_t sub = a.dim() - 1;
  for (PointSet& layer : s.layers)
    layer = initial_segment(sub, static_cast<std::int64_t>(layer.size()));
  s.block = PointSet(sub, positive_prefix(sub, static_cast<std::int64_t>(s.block.size()), axis));
  return reassemble(s);
}

PointSet compute_S(const PointSet& a) {
  if (a.dim() < 2) throw domain_error("compute_S: dimension must be at least 2");
  if (!is_subset_of_X(a)) throw domain_error("compute_S: set is not contained in X_n");
  if (a.empty()) return PointSet(a.dim());
  // A member x of S zeroes to (0, x_2, ..., x_n) in A, and zeroing another axis
  // keeps x_1, so x_1 is at most the largest first coordinate present.
  const coord_t top = a.max_corner()[0];
  std::vector<Point> out;
  for (const Point& base : a) {
    if (base[0] != 0 || base.zero_count() != 1) continue;
    for (coord_t t = 1; t <= top; ++t) {
      Point x = base.with(1, t);
      bool ok = true;
      for (std::size_t k = 2; k <= a.dim() && ok; ++k) ok = a.contains(x.with(k, 0));
      if (ok) out.push_back(std::move(x));
    }
  }
  return PointSet(a.dim(), std::move(out));
}

}  // namespace projgap
