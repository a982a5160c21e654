#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "projgap/extremal.hpp"
#include "projgap/point.hpp"

namespace projgap {

enum class SearchMode { downsets_in_X, all_weak_antichains };

struct SearchOptions {
  SearchMode mode = SearchMode::downsets_in_X;
  // Largest coordinate value a candidate point may use. Defaults: m - 1 for
  // down-sets (which makes the search complete), 2 for all weak antichains.
  std::optional<coord_t> coordinate_bound;
  unsigned worker_count = 1;
  // Cap on visited search nodes; also lifts the documented (n, m) budget.
  std::optional<std::uint64_t> node_limit;
  // Only score sets that are lexicographically least among their images under
  // coordinate permutations. Values are unchanged; witnesses may differ.
  bool symmetry_reduction = false;
};

// Documented exhaustive budget for down-set search:
// n=2: m<=10, n=3: m<=12, n=4: m<=9, n>=5: m<=6.
bool within_budget(std::size_t n, std::int64_t m);

// Calls `visit` once for every down-set in X_n of size m with coordinates at
// most `coordinate_bound` (default m - 1), in canonical generation order.
void for_each_downset(std::size_t n, std::int64_t m, const std::function<void(const PointSet&)>& visit,
                      std::optional<coord_t> coordinate_bound = std::nullopt);

std::vector<PointSet> enumerate_downsets(std::size_t n, std::int64_t m,
                                         std::optional<coord_t> coordinate_bound = std::nullopt);

ExtremalCertificate min_gap_bruteforce(std::size_t n, std::int64_t m, const SearchOptions& opts = {});

// Only defined over down-sets in X_n.
ExtremalCertificate max_S_bruteforce(std::size_t n, std::int64_t m, const SearchOptions& opts = {});

}  // namespace projgap
