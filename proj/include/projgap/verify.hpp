#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projgap/balanced_order.hpp"

namespace projgap {

enum class Suite { lemmas, extremal, all };

struct VerifyConfig {
  Suite suite = Suite::all;
  std::size_t n_max = 4;
  std::int64_t m_max = 10;
  std::uint64_t seed = 0;
  std::uint64_t cases = 1000;  // random cases per property and dimension
  unsigned workers = 1;
  // Order used to build initial segments in the extremal suite; empty means
  // the balanced order. Exists so a broken order can be shown to fail.
  PointOrder order;
};

struct PropertyResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  bool ok() const noexcept { return failed == 0; }
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool all_passed() const;
  const PropertyResult* find(const std::string& name) const;
  // One line per property plus a summary; identical for identical configs.
  std::string text() const;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace projgap
