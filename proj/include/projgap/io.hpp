#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "projgap/extremal.hpp"
#include "projgap/point.hpp"

namespace projgap {

// One point per line, whitespace-separated decimal integers; '#' lines and
// blank lines are skipped. An input without data lines needs `dim`.
PointSet parse_pointset(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

// Balanced order when A is contained in X_n (n >= 2), lexicographic otherwise.
std::string serialize_pointset(const PointSet& a);

// `# method=... value=... n=... m=...` followed by the witness.
std::string serialize_certificate(const ExtremalCertificate& c);

std::string read_text_file(const std::string& path);

}  // namespace projgap
