#include <sstream>

#include "symquot/errors.hpp"
#include "symquot/graphs.hpp"

namespace symquot {

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw DomainError("graph too large for graph6");
  }
  int acc = 0, nbits = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw DomainError("empty graph6 string");
  std::size_t pos = 0, n = 0;
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw DomainError("truncated graph6 string");
    const int v = static_cast<unsigned char>(s[i]) - 63;
    if (v < 0 || v > 63) throw DomainError("invalid graph6 character at position " + std::to_string(i));
    return static_cast<std::size_t>(v);
  };
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126) throw DomainError("graph6 order too large");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i, ++bit) {
      const std::size_t b = byte(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  if (pos + (bit + 5) / 6 != s.size()) throw DomainError("graph6 string has trailing data");
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph from_dimacs(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  Graph g;
  bool header = false;
  std::size_t declared = 0, seen = 0, lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string fmt;
      std::size_t n = 0;
      if (!(ls >> fmt >> n >> declared) || (fmt != "edge" && fmt != "col"))
        throw DomainError("bad DIMACS header on line " + std::to_string(lineno));
      g = Graph(n);
      header = true;
    } else if (kind == "e") {
      std::size_t u = 0, v = 0;
      if (!header || !(ls >> u >> v) || u < 1 || v < 1 || u > g.order() || v > g.order())
        throw DomainError("bad DIMACS edge on line " + std::to_string(lineno));
      g.add_edge(static_cast<Point>(u - 1), static_cast<Point>(v - 1));
      ++seen;
    } else {
      throw DomainError("unknown DIMACS line " + std::to_string(lineno));
    }
  }
  if (!header) throw DomainError("missing DIMACS header");
  if (seen != declared) throw DomainError("DIMACS edge count differs from header");
  return g;
}

}  // namespace symquot
