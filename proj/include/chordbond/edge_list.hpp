#pragma once

// Plain-text edge-list format.
//
//   n m
//   u v        (m lines, 0-based, u < v, ascending lexicographic order)
//
// Lines starting with '#' are comments and may appear anywhere. The writer
// emits exactly this layout with LF endings; the reader also accepts edges
// given as "v u" or out of order, but rejects self-loops, out-of-range ids,
// duplicates and a wrong edge count.

#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace chordbond {

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t at, const std::string& msg)
      : InvalidArgument("line " + std::to_string(at) + ": " + msg), line(at) {}
  std::size_t line;
};

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace detail {

inline bool parse_uint(std::istringstream& in, unsigned long long& out) {
  in >> std::ws;
  if (in.peek() == '-' || in.peek() == '+') return false;
  return static_cast<bool>(in >> out);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    if (detail::blank(line)) continue;

    std::istringstream in(line);
    unsigned long long a = 0;
    unsigned long long b = 0;
    if (!detail::parse_uint(in, a) || !detail::parse_uint(in, b)) {
      throw ParseError(lineno, "expected two non-negative integers, got '" + line + "'");
    }
    in >> std::ws;
    if (!in.eof()) throw ParseError(lineno, "trailing characters in '" + line + "'");

    if (!header) {
      header = {a, b};
      continue;
    }
    const std::size_t n = header->first;
    if (edges.size() == header->second) {
      throw ParseError(lineno, "more edge lines than the declared " + std::to_string(header->second));
    }
    if (a >= n || b >= n) {
      throw ParseError(lineno, "endpoint out of range [0," + std::to_string(n) + ") in '" + line + "'");
    }
    if (a == b) throw ParseError(lineno, "self-loop '" + line + "'");
    Edge e(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(e).second) {
      throw ParseError(lineno, "duplicate edge " + to_string(e));
    }
    edges.push_back(e);
  }

  if (!header) throw ParseError(lineno, "missing 'n m' header");
  if (edges.size() != header->second) {
    throw ParseError(lineno, "declared " + std::to_string(header->second) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(header->first, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

}  // namespace chordbond
