#include "projgap/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "projgap/balanced_order.hpp"
#include "projgap/errors.hpp"
#include "projgap/geometry.hpp"

namespace projgap {

PointSet parse_pointset(std::string_view text, std::optional<std::size_t> dim) {
  std::vector<Point> pts;
  std::vector<std::size_t> line_of;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<coord_t> coords;
    std::size_t i = first;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      const std::string_view token = line.substr(i, j - i);
      coord_t v = 0;
      const char* b = token.data();
      const char* e = b + token.size();
      if (*b == '+') ++b;
      auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec == std::errc::result_out_of_range)
        throw parse_error("integer out of range: '" + std::string(token) + "'", line_no);
      if (ec != std::errc() || ptr != e || b == e)
        throw parse_error("not an integer: '" + std::string(token) + "'", line_no);
      coords.push_back(v);
      i = j;
    }

    if (!dim) dim = coords.size();
    if (coords.size() != *dim)
      throw parse_error("expected " + std::to_string(*dim) + " coordinates, found " +
                            std::to_string(coords.size()),
                        line_no);
    pts.emplace_back(std::move(coords));
    line_of.push_back(line_no);
  }
  if (!dim) throw parse_error("no points and no dimension given", line_no);
  if (*dim == 0) throw parse_error("points must have at least one coordinate", line_no);

  std::vector<std::size_t> order(pts.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a] != pts[b] ? pts[a] < pts[b] : line_of[a] < line_of[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (pts[order[k]] == pts[order[k - 1]])
      throw parse_error("duplicate point " + pts[order[k]].to_string(), line_of[order[k]]);

  return PointSet(*dim, std::move(pts));
}

std::string serialize_pointset(const PointSet& a) {
  std::vector<Point> pts = a.points();
  if (a.dim() >= 2 && is_subset_of_X(a))
    std::sort(pts.begin(), pts.end(),
              [](const Point& x, const Point& y) { return compare_balanced(x, y) < 0; });
  std::string out;
  for (const Point& p : pts) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (k) out += ' ';
      out += std::to_string(p[k]);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_certificate(const ExtremalCertificate& c) {
  std::string out = "# method=" + to_string(c.method) + " value=" + std::to_string(c.value) +
                    " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + "\n";
  if (!c.exhaustive) out += "# exhaustive=false (complete only up to the coordinate bound)\n";
  return out + serialize_pointset(c.witness);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace projgap
