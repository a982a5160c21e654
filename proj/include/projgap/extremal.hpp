#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projgap/balanced_order.hpp"
#include "projgap/point.hpp"

namespace projgap {

enum class Method { initial_segment, brute_force, witness_construction };

std::string to_string(Method m);

// An optimal (or claimed optimal) value for g(n,m) or max |S| together with a
// set realizing it. `exhaustive` is false when the value comes from a search
// that is only complete up to a coordinate bound.
struct ExtremalCertificate {
  std::size_t n = 2;
  std::int64_t m = 0;
  std::int64_t value = 0;
  PointSet witness{2};
  Method method = Method::initial_segment;
  bool exhaustive = true;
};

struct BoundEvaluation {
  std::size_t n = 2;
  std::int64_t m = 0;
  double c_n = 0.0;
  double bound = 0.0;
  std::int64_t exact = 0;
  std::optional<double> ratio;  // exact / bound, absent for m = 0
};

// 1/2 (n-1) n^(1/(n-1)).
double c_const(std::size_t n);

// c_n m^(1 - 1/(n-1)), defined as 0 at m = 0.
double lower_bound(std::size_t n, std::int64_t m);

ExtremalCertificate g_exact(std::size_t n, std::int64_t m, const PointOrder& order = {});

BoundEvaluation evaluate_bound(std::size_t n, std::int64_t m);

// A_N plus the first m - m_N points (lexicographically) of
// {0} x [N, N + floor((m_{N+1} - m_N)^(1/(n-1)))]^(n-1), where m_N <= m < m_{N+1}.
ExtremalCertificate witness_construction(std::size_t n, std::int64_t m);

std::vector<BoundEvaluation> gap_table(std::size_t n, std::int64_t m_from, std::int64_t m_to);

// `n,m,g,bound,ratio` with 6 significant digits; empty ratio for m = 0.
std::string to_csv(const std::vector<BoundEvaluation>& rows);

}  // namespace projgap
