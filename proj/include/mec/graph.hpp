#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mec {

/// Unordered vertex pair, normalized so first < second.
using VertexPair = std::pair<int, int>;

inline VertexPair ordered_pair(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

/// Simple undirected graph on labeled vertices 0..n-1. Adjacency is one
/// bitmask row per vertex; the order is capped at 64 so a row (and a color
/// palette) always fits a machine word. Treat instances as immutable once
/// shared: all queries are const and mutation is meant for construction.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in [1, 64]");
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, const std::vector<VertexPair>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (adj_[u] >> v & 1);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[u] >> v & 1) throw std::invalid_argument("duplicate edge");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
    ++m_;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge");
    adj_[u] &= ~(uint64_t{1} << v);
    adj_[v] &= ~(uint64_t{1} << u);
    --m_;
  }

  /// Neighbor set of v as a bitmask.
  uint64_t neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return std::popcount(adj_[v]); }

  /// Edges sorted lexicographically.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      uint64_t row = adj_[u] >> (u + 1) << (u + 1);
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        out.push_back({u, v});
      }
    }
    return out;
  }

  /// Non-adjacent pairs sorted lexicographically.
  std::vector<VertexPair> non_edges() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!(adj_[u] >> v & 1)) out.push_back({u, v});
    return out;
  }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!(adj_[u] >> v & 1)) g.add_edge(u, v);
    return g;
  }

  /// Copy with vertex u renamed perm[u].
  Graph relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_;
  int m_ = 0;
  std::vector<uint64_t> adj_;
};

}  // namespace mec
