#include "projgap/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "projgap/compressions.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

namespace projgap {

namespace {

// Generation order for down-sets: coordinate sum, then lexicographic. Any
// linear extension of the coordinatewise order works; sorting a down-set by
// one makes every prefix a down-set, so each set has exactly one growth path.
bool graded_less(const Point& a, const Point& b) {
  const coord_t sa = a.sum(), sb = b.sum();
  return sa != sb ? sa < sb : a < b;
}

bool strictly_below(const Point& x, const Point& y) {
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (!(x[k] < y[k])) return false;
  return true;
}

bool contains(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

struct Node {
  std::vector<Point> chosen;  // in generation order
};

// One search space: which points may extend a partial set, and in what order.
class Space {
 public:
  Space(std::size_t n, SearchMode mode, coord_t bound) : n_(n), mode_(mode), bound_(bound) {
    if (mode_ == SearchMode::all_weak_antichains) {
      Point x = Point::zeros(n);
      while (true) {
        box_.push_back(x);
        std::size_t k = n;
        while (k > 0 && x[k - 1] == bound_) x[--k] = 0;
        if (k == 0) break;
        ++x[k - 1];
      }
    }
  }

  // Extensions of `chosen` that come after its last element, ascending.
  std::vector<Point> children(const std::vector<Point>& chosen) const {
    return mode_ == SearchMode::downsets_in_X ? downset_children(chosen) : antichain_children(chosen);
  }

  std::size_t box_size() const { return box_.size(); }

 private:
  std::vector<Point> downset_children(const std::vector<Point>& chosen) const {
    if (chosen.empty()) return {Point::zeros(n_)};
    const Point& last = chosen.back();
    std::vector<Point> out;
    for (const Point& e : chosen) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (e[j] >= bound_) continue;
        Point y = e;
        ++y[j];
        if (!y.has_zero() || !graded_less(last, y) || contains(chosen, y) || contains(out, y)) continue;
        bool addable = true;
        for (std::size_t k = 0; k < n_ && addable; ++k) {
          if (y[k] == 0 || k == j) continue;
          Point pred = y;
          --pred[k];
          addable = contains(chosen, pred);
        }
        if (addable) out.push_back(std::move(y));
      }
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
  }

  std::vector<Point> antichain_children(const std::vector<Point>& chosen) const {
    auto it = chosen.empty() ? box_.begin() : std::upper_bound(box_.begin(), box_.end(), chosen.back());
    std::vector<Point> out;
    for (; it != box_.end(); ++it) {
      bool ok = true;
      for (const Point& c : chosen)
        if (strictly_below(c, *it) || strictly_below(*it, c)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(*it);
    }
    return out;
  }

  std::size_t n_;
  SearchMode mode_;
  coord_t bound_;
  std::vector<Point> box_;
};

bool is_canonical_under_permutations(const PointSet& a) {
  std::vector<std::size_t> perm(a.dim());
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Point>& base = a.points();
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Point> image;
    image.reserve(a.size());
    for (const Point& x : base) {
      Point y = Point::zeros(a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k) y[k] = x[perm[k]];
      image.push_back(std::move(y));
    }
    std::sort(image.begin(), image.end());
    if (image < base) return false;
  }
  return true;
}

struct Best {
  bool found = false;
  std::int64_t value = 0;
  std::vector<Point> witness;
};

// Exhaustive search over sets of size m in `space`. Returns the first set in
// generation order attaining the optimum of `score` (minimum if `minimize`).
// The tree is cut at depth 2; subtrees are handed to workers and their results
// are reduced in subtree order, so the answer does not depend on scheduling.
Best run_search(const Space& space, std::size_t n, std::int64_t m, const SearchOptions& opts,
                const std::function<std::int64_t(const PointSet&)>& score, bool minimize) {
  const auto target = static_cast<std::size_t>(m);
  std::atomic<std::uint64_t> nodes{0};
  auto tick = [&] {
    const std::uint64_t seen = ++nodes;
    if (opts.node_limit && seen > *opts.node_limit)
      throw budget_error("search exceeded node limit of " + std::to_string(*opts.node_limit));
  };

  auto offer = [&](Best& best, const std::vector<Point>& chosen) {
    PointSet s(n, chosen);
    if (opts.symmetry_reduction && !is_canonical_under_permutations(s)) return;
    const std::int64_t v = score(s);
    if (!best.found || (minimize ? v < best.value : v > best.value)) {
      best.found = true;
      best.value = v;
      best.witness = chosen;
    }
  };

  std::function<void(Node&, Best&)> dfs = [&](Node& node, Best& best) {
    tick();
    if (node.chosen.size() == target) {
      offer(best, node.chosen);
      return;
    }
    for (Point& c : space.children(node.chosen)) {
      node.chosen.push_back(std::move(c));
      dfs(node, best);
      node.chosen.pop_back();
    }
  };

  // Frontier at depth min(2, m), in generation order.
  std::vector<Node> frontier{Node{}};
  const std::size_t split = std::min<std::size_t>(2, target);
  for (std::size_t depth = 0; depth < split; ++depth) {
    std::vector<Node> next;
    for (Node& node : frontier) {
      tick();
      for (Point& c : space.children(node.chosen)) {
        Node child = node;
        child.chosen.push_back(std::move(c));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Best> results(frontier.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop) {
      const std::size_t idx = cursor++;
      if (idx >= frontier.size()) return;
      try {
        Node node = frontier[idx];
        dfs(node, results[idx]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  const unsigned workers = std::max(1u, opts.worker_count);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Best best;
  for (Best& r : results) {
    if (!r.found) continue;
    if (!best.found || (minimize ? r.value < best.value : r.value > best.value)) best = std::move(r);
  }
  return best;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

constexpr std::uint64_t kAntichainSubsetBudget = 50'000'000;

ExtremalCertificate search(std::size_t n, std::int64_t m, const SearchOptions& opts,
                           const std::function<std::int64_t(const PointSet&)>& score, bool minimize) {
  if (n < 2) throw domain_error("search: n must be at least 2");
  if (m < 0) throw domain_error("search: negative size");
  if (opts.coordinate_bound && *opts.coordinate_bound < 1)
    throw domain_error("search: coordinate bound must be at least 1");

  const bool downsets = opts.mode == SearchMode::downsets_in_X;
  const coord_t natural = std::max<coord_t>(m - 1, 0);
  const coord_t bound = opts.coordinate_bound.value_or(downsets ? natural : 2);
  Space space(n, opts.mode, bound);

  if (!opts.node_limit) {
    if (downsets && !within_budget(n, m))
      throw budget_error("exhaustive down-set search for n=" + std::to_string(n) + ", m=" +
                         std::to_string(m) + " is outside the documented budget");
    if (!downsets && saturating_binomial(space.box_size(), static_cast<std::uint64_t>(m)) >
                         kAntichainSubsetBudget)
      throw budget_error("weak-antichain search space C(" + std::to_string(space.box_size()) + ", " +
                         std::to_string(m) + ") is too large; pass a node limit to force it");
  }

  Best best = run_search(space, n, m, opts, score, minimize);
  ExtremalCertificate c;
  c.n = n;
  c.m = m;
  c.method = Method::brute_force;
  c.exhaustive = downsets && bound >= natural;
  if (!best.found)
    throw domain_error("no candidate set of size " + std::to_string(m) + " within coordinate bound " +
                       std::to_string(bound));
  c.value = best.value;
  c.witness = PointSet(n, std::move(best.witness));
  return c;
}

}  // namespace

bool within_budget(std::size_t n, std::int64_t m) {
  if (m < 0) return false;
  switch (n) {
    case 2: return m <= 10;
    case 3: return m <= 12;
    case 4: return m <= 9;
    default: return n >= 5 && m <= 6;
  }
}

void for_each_downset(std::size_t n, std::int64_t m, const std::function<void(const PointSet&)>& visit,
                      std::optional<coord_t> coordinate_bound) {
  if (n < 2) throw domain_error("for_each_downset: n must be at least 2");
  if (m < 0) throw domain_error("for_each_downset: negative size");
  Space space(n, SearchMode::downsets_in_X, coordinate_bound.value_or(std::max<coord_t>(m - 1, 0)));
  const auto target = static_cast<std::size_t>(m);
  std::vector<Point> chosen;
  std::function<void()> dfs = [&] {
    if (chosen.size() == target) {
      visit(PointSet(n, chosen));
      return;
    }
    for (Point& c : space.children(chosen)) {
      chosen.push_back(std::move(c));
      dfs();
      chosen.pop_back();
    }
  };
  dfs();
}

std::vector<PointSet> enumerate_downsets(std::size_t n, std::int64_t m,
                                         std::optional<coord_t> coordinate_bound) {
  if (!within_budget(n, m))
    throw budget_error("down-set enumeration for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                       " is outside the documented budget");
  std::vector<PointSet> out;
  for_each_downset(n, m, [&](const PointSet& s) { out.push_back(s); }, coordinate_bound);
  return out;
}

ExtremalCertificate min_gap_bruteforce(std::size_t n, std::int64_t m, const SearchOptions& opts) {
  return search(n, m, opts, [](const PointSet& s) { return gap(s).gap; }, true);
}

ExtremalCertificate max_S_bruteforce(std::size_t n, std::int64_t m, const SearchOptions& opts) {
  if (opts.mode != SearchMode::downsets_in_X)
    throw domain_error("max_S_bruteforce: S is only defined for subsets of X_n; use down-set mode");
  return search(
      n, m, opts, [](const PointSet& s) { return static_cast<std::int64_t>(compute_S(s).size()); },
      false);
}

}  // namespace projgap
