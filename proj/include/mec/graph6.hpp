#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "mec/graph.hpp"

namespace mec {

/// graph6 interchange, header-less variant for graphs on at most 62
/// vertices: one printable line per graph, first byte n+63, then the upper
/// triangle of the adjacency matrix in column order ((0,1), (0,2), (1,2),
/// (0,3), ...) packed big-endian 6 bits per byte, each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 supports at most 62 vertices here");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

/// Parses one header-less graph6 line (trailing CR/LF tolerated).
/// Throws std::invalid_argument on malformed input.
inline Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 1 || n > 62)
    throw std::invalid_argument("graph6: order byte out of range");
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t want = 1 + (nbits + 5) / 6;
  if (line.size() != want)
    throw std::invalid_argument("graph6: wrong line length for order " +
                                std::to_string(n));
  Graph g(n);
  size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int c = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
      if (c < 0 || c > 63)
        throw std::invalid_argument("graph6: byte outside printable range");
      if (c >> (5 - bit % 6) & 1) g.add_edge(u, v);
    }
  // Padding bits beyond the triangle must be zero.
  for (; bit % 6 != 0; ++bit) {
    int c = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
    if (c >> (5 - bit % 6) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

/// Reads graph6 lines from a stream until EOF, skipping blank lines.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n'))
      sv.remove_suffix(1);
    if (sv.empty()) continue;
    out.push_back(from_graph6(sv));
  }
  return out;
}

}  // namespace mec
