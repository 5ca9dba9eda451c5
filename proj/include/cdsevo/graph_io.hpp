#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsevo/graph.hpp"

namespace cdsevo {

/// Raised for malformed graph text.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: header line `n m`, then m lines `u v` with 1 <= u < v <= n.
// Lines whose first non-blank character is '#' are comments; blank lines are
// skipped.

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& what) {
    throw GraphFormatError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a >> b)) fail("expected two integers");
    std::string trailing;
    if (fields >> trailing) fail("unexpected trailing token '" + trailing + "'");

    if (!have_header) {
      if (a < 0 || b < 0) fail("negative count in header");
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      edges.reserve(m);
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail("more edges than declared in header");
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n ||
        static_cast<std::size_t>(b) > n) {
      fail("vertex id out of range 1.." + std::to_string(n));
    }
    if (a >= b) fail("edge must satisfy u < v");
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }
  if (!have_header) throw GraphFormatError("missing header line");
  if (edges.size() != m) {
    throw GraphFormatError("header declares " + std::to_string(m) +
                           " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(e.what());
  }
}

inline Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace cdsevo
