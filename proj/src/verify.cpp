#include "projgap/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "projgap/checked.hpp"
#include "projgap/compressions.hpp"
#include "projgap/extremal.hpp"
#include "projgap/geometry.hpp"
#include "projgap/random_sets.hpp"
#include "projgap/search.hpp"

namespace projgap {

namespace {

using Outcome = std::optional<std::string>;  // nullopt on success

std::string describe(const PointSet& a) {
  std::string s = "{";
  for (const Point& p : a) {
    if (s.size() > 1) s += ',';
    s += p.to_string();
  }
  return s + "}";
}

class Recorder {
 public:
  PropertyResult& open(const std::string& name) {
    PropertyResult r;
    r.name = name;
    results_.push_back(std::move(r));
    return results_.back();
  }

  static void record(PropertyResult& r, const Outcome& failure) {
    if (!failure) {
      ++r.passed;
      return;
    }
    if (r.failed++ == 0) r.first_failure = *failure;
  }

  // Runs `check` and turns an escaping exception into a failure.
  static void run(PropertyResult& r, const std::function<Outcome()>& check) {
    try {
      record(r, check());
    } catch (const std::exception& e) {
      record(r, std::string("exception: ") + e.what());
    }
  }

  std::vector<PropertyResult> take() { return {results_.begin(), results_.end()}; }

 private:
  std::deque<PropertyResult> results_;  // stable references across open()
};

std::size_t labelled_position(std::size_t axis, std::size_t dropped) {
  return axis < dropped ? axis : axis - 1;
}

bool projections_not_larger(const PointSet& after, const PointSet& before) {
  for (std::size_t j = 1; j <= after.dim(); ++j)
    if (project(after, j).size() > project(before, j).size()) return false;
  return true;
}

// Independent reading of the induced order on positive vectors: the inserted
// zero never disagrees, so only u and v themselves matter.
std::strong_ordering direct_positive_order(const Point& u, const Point& v) {
  coord_t um = -1, vm = -1;
  std::size_t ua = 0, va = 0;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (u[k] == v[k]) continue;
    if (u[k] >= um) um = u[k], ua = k;
    if (v[k] >= vm) vm = v[k], va = k;
  }
  if (um != vm) return um <=> vm;
  return ua <=> va;
}

void lemma_suite(const VerifyConfig& cfg, Rng& rng, Recorder& rec) {
  const std::size_t n_lo = 2, n_hi = std::max<std::size_t>(2, cfg.n_max);
  std::uniform_int_distribution<std::size_t> size_dist(1, 14);

  auto& gap_nonneg = rec.open("gap-nonnegative");
  auto& remainder = rec.open("layer-remainder-empty");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet a = random_weak_antichain(rng, n, size_dist(rng), -3, 4);
      Recorder::run(gap_nonneg, [&]() -> Outcome {
        if (gap(a).gap < 0) return "negative gap for " + describe(a);
        return std::nullopt;
      });
      Recorder::run(remainder, [&]() -> Outcome {
        LayerDecomposition d = layer_decomposition(a);
        if (!d.decomposable()) return "nonempty remainder for " + describe(a);
        std::int64_t injective_total = 0;
        for (std::size_t k = 1; k <= n; ++k) {
          const PointSet& layer = d.layers[k - 1];
          if (layer.size() != project(layer, k).size()) return "pi_k not injective on A_k";
          injective_total += static_cast<std::int64_t>(layer.size());
        }
        const GapReport g = gap(a);
        std::int64_t proj_total = 0;
        for (auto s : g.projection_sizes) proj_total += s;
        if (injective_total != g.size || proj_total < injective_total)
          return "layer sizes do not account for " + describe(a);
        return std::nullopt;
      });
    }

  auto& containment = rec.open("projection-containment");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet a = random_nonnegative_set(rng, n, size_dist(rng), 3);
      Recorder::run(containment, [&]() -> Outcome {
        for (std::size_t i = 1; i <= n; ++i) {
          PointSet ci = i_compress(a, i);
          if (ci.size() != a.size()) return "C_i changed the size of " + describe(a);
          for (std::size_t j = 1; j <= n; ++j) {
            if (j == i) continue;
            PointSet lhs = project(ci, j);
            PointSet rhs = i_compress(project(a, j), labelled_position(i, j));
            if (!lhs.subset_of(rhs))
              return "pi_j(C_i(A)) not inside C_i(pi_j(A)) for i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " A=" + describe(a);
            if (lhs.size() > project(a, j).size()) return "projection grew";
          }
        }
        return std::nullopt;
      });
    }

  auto& staged = rec.open("staged-compression");
  auto& pipeline = rec.open("pipeline-structure");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet w = random_weak_antichain(rng, n, size_dist(rng), -3, 4);
      if (w.empty()) w = PointSet(n, {Point::zeros(n)});
      const PointSet base = normalize_translate(w);
      std::uniform_int_distribution<std::size_t> axis_dist(1, n);
      const std::size_t i = axis_dist(rng);
      Recorder::run(staged, [&]() -> Outcome {
        PointSet cur = base;
        for (std::size_t k = 1; k < i; ++k) cur = i_compress(cur, k);
        if (!layer_decomposition(cur).decomposable()) return "precondition: not layer-decomposable";
        for (std::size_t k = 1; k < i; ++k)
          if (!is_i_compressed(cur, k)) return "precondition: not k-compressed";
        PointSet next = i_compress(cur, i);
        for (std::size_t k = 1; k <= i; ++k)
          if (!is_i_compressed(next, k))
            return "C_" + std::to_string(i) + " result not " + std::to_string(k) + "-compressed: " +
                   describe(base);
        if (!layer_decomposition(next).decomposable()) return "C_i result not layer-decomposable";
        return std::nullopt;
      });
      Recorder::run(pipeline, [&]() -> Outcome {
        PointSet cur = base;
        for (std::size_t k = 1; k <= n; ++k) cur = i_compress(cur, k);
        if (!is_subset_of_X(cur)) return "pipeline left X_n for " + describe(base);
        if (!projections_not_larger(cur, base)) return "pipeline grew a projection";
        LayerDecomposition d = layer_decomposition(cur);
        if (!d.decomposable()) return "pipeline result not layer-decomposable";
        for (std::size_t k = 1; k <= n; ++k) {
          if (!is_i_compressed(cur, k)) return "pipeline result not k-compressed";
          std::vector<Point> expect;
          for (const Point& x : cur) {
            bool ok = x[k - 1] == 0;
            for (std::size_t l = 1; l < k && ok; ++l) ok = x[l - 1] != 0;
            if (ok) expect.push_back(x);
          }
          if (d.layers[k - 1] != PointSet(n, expect)) return "layer A'_k has the wrong shape";
        }
        return std::nullopt;
      });
    }

  auto& complete = rec.open("complete-compression");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet a = random_subset_of_X(rng, n, size_dist(rng), 4);
      Recorder::run(complete, [&]() -> Outcome {
        for (std::size_t i = 1; i <= n; ++i) {
          PointSet b = complete_compress(a, i);
          if (b.size() != a.size()) return "CC_i changed size";
          if (!is_subset_of_X(b)) return "CC_i left X_n for " + describe(a);
          if (!projections_not_larger(b, a)) return "CC_i grew a projection of " + describe(a);
          if (b != a && !(b.coordinate_sum() < a.coordinate_sum()))
            return "CC_i changed the set without lowering the coordinate sum";
          if (b == a && !is_i_compressed(a, i)) return "CC_i fixed point not i-compressed";
        }
        return std::nullopt;
      });
    }

  auto& reduce = rec.open("reduce-to-downset");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet a = random_weak_antichain(rng, n, size_dist(rng), -3, 4);
      Recorder::run(reduce, [&]() -> Outcome {
        PointSet r = reduce_to_downset(a);
        if (r.size() != a.size()) return "size changed";
        if (!is_subset_of_X(r) || !is_down_set(r) || !is_weak_antichain(r))
          return "result is not a down-set in X_n: " + describe(a);
        if (!projections_not_larger(r, a)) return "projection grew for " + describe(a);
        return std::nullopt;
      });
    }

  auto& balanced = rec.open("balanced-compression");
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      PointSet a = random_downset_in_X(rng, n, size_dist(rng));
      Recorder::run(balanced, [&]() -> Outcome {
        const auto s_before = compute_S(a).size();
        const auto g_before = gap(a).gap;
        for (std::size_t i = 1; i <= n; ++i) {
          PointSet b = balanced_compress(a, i);
          if (b.size() != a.size()) return "CCC_i changed size";
          if (!is_subset_of_X(b) || !is_down_set(b))
            return "CCC_" + std::to_string(i) + " result not a down-set: " + describe(a);
          if (compute_S(b).size() < s_before) return "CCC_i shrank S for " + describe(a);
          if (gap(b).gap > g_before) return "CCC_i raised the gap of " + describe(a);
        }
        return std::nullopt;
      });
    }

  auto& axioms = rec.open("balanced-order-axioms");
  auto& positive = rec.open("compare-positive-direct");
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    std::uniform_int_distribution<coord_t> coord(0, 4);
    std::uniform_int_distribution<std::size_t> axis_dist(1, n);
    auto draw_x = [&] {
      Point p = Point::zeros(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = coord(rng);
      p[axis_dist(rng) - 1] = 0;
      return p;
    };
    for (std::uint64_t c = 0; c < cfg.cases; ++c) {
      const Point x = draw_x(), y = draw_x(), z = draw_x();
      Recorder::run(axioms, [&]() -> Outcome {
        const auto xy = compare_balanced(x, y), yx = compare_balanced(y, x);
        if ((xy == 0) != (x == y)) return "Equal on distinct points " + x.to_string() + y.to_string();
        if ((xy < 0) != (yx > 0)) return "antisymmetry fails for " + x.to_string() + y.to_string();
        if (xy < 0 && compare_balanced(y, z) < 0 && !(compare_balanced(x, z) < 0))
          return "transitivity fails for " + x.to_string() + y.to_string() + z.to_string();
        if (x.max() < y.max() && !(xy < 0)) return "max-extension fails";
        bool below = x != y;
        for (std::size_t k = 0; k < n && below; ++k) below = x[k] <= y[k];
        if (below && !(xy < 0)) return "not a linear extension at " + x.to_string() + y.to_string();
        return std::nullopt;
      });
      std::uniform_int_distribution<coord_t> pos(1, 4);
      Point u = Point::zeros(n - 1), v = Point::zeros(n - 1);
      for (std::size_t k = 0; k + 1 < n; ++k) u[k] = pos(rng), v[k] = pos(rng);
      const std::size_t i = axis_dist(rng);
      Recorder::run(positive, [&]() -> Outcome {
        if (compare_positive(u, v, i) != direct_positive_order(u, v))
          return "induced order disagrees at " + u.to_string() + v.to_string();
        return std::nullopt;
      });
    }
  }
}

void extremal_suite(const VerifyConfig& cfg, Recorder& rec) {
  const std::size_t n_hi = std::max<std::size_t>(2, cfg.n_max);
  SearchOptions opts;
  opts.worker_count = cfg.workers;

  auto& min_gap = rec.open("oracle-min-gap");
  auto& max_s = rec.open("oracle-max-S");
  auto& seg_down = rec.open("initial-segment-downset");
  auto& seg_fixed = rec.open("initial-segment-ccc-fixed");
  for (std::size_t n = 2; n <= n_hi; ++n)
    for (std::int64_t m = 0; m <= cfg.m_max; ++m) {
      if (!within_budget(n, m)) continue;
      const std::string where = " at n=" + std::to_string(n) + " m=" + std::to_string(m);
      const PointSet seg = initial_segment(n, m, cfg.order);
      Recorder::run(min_gap, [&]() -> Outcome {
        const auto oracle = min_gap_bruteforce(n, m, opts).value;
        const auto claimed = g_exact(n, m, cfg.order).value;
        if (oracle != claimed)
          return "oracle " + std::to_string(oracle) + " vs initial segment " + std::to_string(claimed) + where;
        return std::nullopt;
      });
      Recorder::run(max_s, [&]() -> Outcome {
        const auto oracle = max_S_bruteforce(n, m, opts).value;
        const auto claimed = static_cast<std::int64_t>(compute_S(seg).size());
        if (oracle != claimed)
          return "oracle " + std::to_string(oracle) + " vs initial segment " + std::to_string(claimed) + where;
        return std::nullopt;
      });
      Recorder::run(seg_down, [&]() -> Outcome {
        if (!is_subset_of_X(seg) || !is_down_set(seg)) return "initial segment not a down-set" + where;
        return std::nullopt;
      });
      Recorder::run(seg_fixed, [&]() -> Outcome {
        for (std::size_t i = 1; i <= n; ++i)
          if (balanced_compress(seg, i) != seg) return "CCC_" + std::to_string(i) + " moved the segment" + where;
        return std::nullopt;
      });
    }

  auto& a_n = rec.open("A_N-extremal");
  for (std::size_t n = 2; n <= n_hi; ++n)
    for (std::int64_t big_n = 1; big_n <= 4; ++big_n) {
      Recorder::run(a_n, [&]() -> Outcome {
        const auto e = static_cast<int>(n);
        const std::int64_t m = a_n_size(n, big_n);
        const std::int64_t formula = static_cast<std::int64_t>(n) * checked::pow(big_n, e - 1) -
                                     checked::pow(big_n, e) + checked::pow(big_n - 1, e);
        const ExtremalCertificate c = g_exact(n, m, cfg.order);
        if (c.value != formula || c.witness != construct_A_N(n, big_n))
          return "g(" + std::to_string(n) + ", m_" + std::to_string(big_n) + ") = " +
                 std::to_string(c.value) + ", formula gives " + std::to_string(formula);
        return std::nullopt;
      });
    }

  auto& bound = rec.open("lower-bound");
  auto& witness = rec.open("witness-decomposition");
  for (std::size_t n = 3; n <= n_hi; ++n)
    for (std::int64_t m = 0; m <= 200; ++m) {
      Recorder::run(bound, [&]() -> Outcome {
        const BoundEvaluation b = evaluate_bound(n, m);
        if (static_cast<double>(b.exact) < b.bound - 1e-9)
          return "g below c_n m^(1-1/(n-1)) at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return std::nullopt;
      });
      if (m == 0) continue;
      Recorder::run(witness, [&]() -> Outcome {
        const ExtremalCertificate w = witness_construction(n, m);
        std::int64_t big_n = 1;
        while (a_n_size(n, big_n + 1) <= m) ++big_n;
        const PointSet core = construct_A_N(n, big_n);
        std::vector<Point> rest;
        for (const Point& p : w.witness)
          if (!core.contains(p)) rest.push_back(p);
        const PointSet block(n, rest);
        if (static_cast<std::int64_t>(w.witness.size()) != m || !is_weak_antichain(w.witness))
          return "witness is not a weak antichain of size m";
        if (w.value != gap(core).gap + gap(block).gap) return "gap does not split over A_N and B";
        if (w.value < g_exact(n, m).value) return "witness beats the claimed minimum";
        return std::nullopt;
      });
    }
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.ok(); });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
  for (const PropertyResult& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

std::string VerifyReport::text() const {
  std::string out;
  std::size_t failing = 0;
  for (const PropertyResult& r : results) {
    const std::uint64_t total = r.passed + r.failed;
    if (r.ok()) {
      out += "PASS " + r.name + " " + std::to_string(r.passed) + "/" + std::to_string(total) + "\n";
    } else {
      ++failing;
      out += "FAIL " + r.name + " " + std::to_string(r.failed) + "/" + std::to_string(total) +
             " failed; first: " + r.first_failure + "\n";
    }
  }
  if (failing == 0)
    out += "verify: " + std::to_string(results.size()) + " properties, all passed\n";
  else
    out += "verify: " + std::to_string(failing) + " of " + std::to_string(results.size()) +
           " properties failed\n";
  return out;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  Rng rng(cfg.seed);
  Recorder rec;
  if (cfg.suite == Suite::lemmas || cfg.suite == Suite::all) lemma_suite(cfg, rng, rec);
  if (cfg.suite == Suite::extremal || cfg.suite == Suite::all) extremal_suite(cfg, rec);
  return VerifyReport{rec.take()};
}

}  // namespace projgap
