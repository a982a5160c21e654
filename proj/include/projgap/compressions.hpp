#pragma once

#include <cstdint>
#include <vector>

#include "projgap/point.hpp"

namespace projgap {

// A_1 = B_1(A), A_k = B_k(A \ (A_1 u ... u A_{k-1})); remainder is whatever is left.
struct LayerDecomposition {
  std::vector<PointSet> layers;
  PointSet remainder{0};

  bool decomposable() const noexcept { return remainder.empty(); }
};

// Splitting of a down-set in X_n along one axis: layers[a] holds the
// (n-1)-dimensional remainders of points with coordinate a on that axis that
// still have a zero elsewhere; block holds the strictly positive remainders of
// points with a zero on the axis.
struct SliceDecomposition {
  std::size_t axis = 1;
  std::vector<PointSet> layers;
  PointSet block{0};
};

// Points minimal in coordinate `axis` within their pi_axis-fiber.
PointSet bottom_layer(const PointSet& a, std::size_t axis);

LayerDecomposition layer_decomposition(const PointSet& a);

// C_i: zero the axis coordinate of every bottom-layer point. Needs A >= 0.
PointSet i_compress(const PointSet& a, std::size_t axis);
bool is_i_compressed(const PointSet& a, std::size_t axis);

// CC_i: within each fiber of k points, reassign axis coordinates 0..k-1. Needs A >= 0.
PointSet complete_compress(const PointSet& a, std::size_t axis);

// Translate into the nonnegative orthant, apply C_1..C_n, then complete
// compressions round-robin until a full pass changes nothing. The result is a
// down-set in X_n of the same size with no larger projection on any axis.
PointSet reduce_to_downset(const PointSet& a);

SliceDecomposition slice_decomposition(const PointSet& a, std::size_t axis);
PointSet reassemble(const SliceDecomposition& slices);

// CCC_i on a down-set in X_n.
PointSet balanced_compress(const PointSet& a, std::size_t axis);

// Strictly positive points all of whose single-coordinate zeroings lie in A.
PointSet compute_S(const PointSet& a);

}  // namespace projgap
