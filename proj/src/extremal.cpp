#include "projgap/extremal.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "projgap/checked.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

namespace projgap {

std::string to_string(Method m) {
  switch (m) {
    case Method::initial_segment: return "initial-segment";
    case Method::brute_force: return "brute-force";
    case Method::witness_construction: return "witness-construction";
  }
  return "unknown";
}

double c_const(std::size_t n) {
  if (n < 2) throw domain_error("c_const: n must be at least 2");
  const double nd = static_cast<double>(n);
  return 0.5 * (nd - 1.0) * std::pow(nd, 1.0 / (nd - 1.0));
}

double lower_bound(std::size_t n, std::int64_t m) {
  if (m < 0) throw domain_error("lower_bound: negative size");
  if (m == 0) return 0.0;
  const double nd = static_cast<double>(n);
  return c_const(n) * std::pow(static_cast<double>(m), 1.0 - 1.0 / (nd - 1.0));
}

ExtremalCertificate g_exact(std::size_t n, std::int64_t m, const PointOrder& order) {
  if (n < 2) throw domain_error("g_exact: n must be at least 2");
  if (m < 0) throw domain_error("g_exact: negative size");
  ExtremalCertificate c;
  c.n = n;
  c.m = m;
  c.witness = initial_segment(n, m, order);
  c.value = gap(c.witness).gap;
  c.method = Method::initial_segment;
  return c;
}

BoundEvaluation evaluate_bound(std::size_t n, std::int64_t m) {
  BoundEvaluation e;
  e.n = n;
  e.m = m;
  e.c_n = c_const(n);
  e.bound = lower_bound(n, m);
  e.exact = g_exact(n, m).value;
  if (m > 0) e.ratio = static_cast<double>(e.exact) / e.bound;
  return e;
}

ExtremalCertificate witness_construction(std::size_t n, std::int64_t m) {
  if (n < 3) throw domain_error("witness_construction: n must be at least 3");
  if (m < 1) throw domain_error("witness_construction: m must be positive");

  std::int64_t big_n = 1;
  while (a_n_size(n, big_n + 1) <= m) ++big_n;
  const std::int64_t m_n = a_n_size(n, big_n);
  const std::int64_t step = a_n_size(n, big_n + 1) - m_n;
  const std::int64_t width = checked::floor_root(step, static_cast<int>(n - 1));
  const std::int64_t extra = m - m_n;

  // Lexicographic walk through {0} x [N, N+width]^(n-1).
  std::vector<Point> block;
  Point x = Point::zeros(n);
  for (std::size_t k = 1; k < n; ++k) x[k] = big_n;
  while (static_cast<std::int64_t>(block.size()) < extra) {
    block.push_back(x);
    std::size_t k = n;
    while (k > 1 && x[k - 1] == big_n + width) x[--k] = big_n;
    if (k == 1) break;
    ++x[k - 1];
  }
  if (static_cast<std::int64_t>(block.size()) != extra)
    throw std::logic_error("witness_construction: block box too small for m - m_N points");

  ExtremalCertificate c;
  c.n = n;
  c.m = m;
  c.witness = disjoint_union(construct_A_N(n, big_n), PointSet(n, std::move(block)));
  c.value = gap(c.witness).gap;
  c.method = Method::witness_construction;
  return c;
}

std::vector<BoundEvaluation> gap_table(std::size_t n, std::int64_t m_from, std::int64_t m_to) {
  if (m_from < 0 || m_from > m_to) throw domain_error("gap_table: need 0 <= m_from <= m_to");
  std::vector<BoundEvaluation> rows;
  rows.reserve(static_cast<std::size_t>(m_to - m_from + 1));
  for (std::int64_t m = m_from; m <= m_to; ++m) rows.push_back(evaluate_bound(n, m));
  return rows;
}

std::string to_csv(const std::vector<BoundEvaluation>& rows) {
  std::string out = "n,m,g,bound,ratio\n";
  char buf[64];
  for (const BoundEvaluation& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.exact) + ',';
    std::snprintf(buf, sizeof buf, "%.6g", r.bound);
    out += buf;
    out += ',';
    if (r.ratio) {
      std::snprintf(buf, sizeof buf, "%.6g", *r.ratio);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace projgap
