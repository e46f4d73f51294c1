#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// Colors needed for a proper edge coloring of the complete graph K_n:
/// n-1 when n is even, n when n is odd, 0 for the edgeless K_1.
inline int chromatic_index_complete(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n == 1) return 0;
  return n % 2 == 0 ? n - 1 : n;
}

/// Assignment edge -> color index in 0..k-1, possibly partial. Stored as a
/// dense n x n table (-1 = unassigned) so lookups stay O(1); which pairs are
/// legal to color is the associated Graph's business, not this class's.
class EdgeColoring {
 public:
  static constexpr int kUnassigned = -1;

  EdgeColoring(int n, int k)
      : n_(n), k_(k), table_(static_cast<size_t>(n) * n, kUnassigned) {
    if (n < 1 || n > Graph::kMaxOrder)
      throw std::invalid_argument("coloring order must be in [1, 64]");
    if (k < 0 || k > Graph::kMaxOrder)
      throw std::invalid_argument("color count must be in [0, 64]");
  }

  int order() const { return n_; }
  int color_count() const { return k_; }
  int assigned_count() const { return assigned_; }

  int color(int u, int v) const {
    check_pair(u, v);
    return table_[static_cast<size_t>(u) * n_ + v];
  }

  void set(int u, int v, int c) {
    check_pair(u, v);
    if (c < 0 || c >= k_) throw std::invalid_argument("color out of range");
    auto& a = table_[static_cast<size_t>(u) * n_ + v];
    auto& b = table_[static_cast<size_t>(v) * n_ + u];
    if (a == kUnassigned) ++assigned_;
    a = b = static_cast<int8_t>(c);
  }

  void unset(int u, int v) {
    check_pair(u, v);
    auto& a = table_[static_cast<size_t>(u) * n_ + v];
    auto& b = table_[static_cast<size_t>(v) * n_ + u];
    if (a != kUnassigned) --assigned_;
    a = b = kUnassigned;
  }

  bool operator==(const EdgeColoring&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
      throw std::invalid_argument("bad vertex pair");
  }

  int n_;
  int k_;
  int assigned_ = 0;
  std::vector<int8_t> table_;
};

/// Palette(v) = set of colors on colored edges at v, as a bitmask. Works on
/// improper colorings too (a color repeated at v still sets one bit).
inline std::vector<uint64_t> palettes(const Graph& g, const EdgeColoring& col) {
  std::vector<uint64_t> pal(static_cast<size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    int c = col.color(u, v);
    if (c != EdgeColoring::kUnassigned) {
      pal[u] |= uint64_t{1} << c;
      pal[v] |= uint64_t{1} << c;
    }
  }
  return pal;
}

enum class ProperStatus { proper, improper, incomplete };

struct ProperCheck {
  ProperStatus status;
  // Witness for an improper verdict: some vertex with two incident edges in
  // the same color, or an uncolored edge endpoint for incomplete.
  int vertex = -1;
  int color = -1;

  explicit operator bool() const { return status == ProperStatus::proper; }
};

/// Checks a total coloring of g's edges for properness. The color count must
/// match chromatic_index_complete(g.order()); anything else is a usage error.
inline ProperCheck check_proper(const Graph& g, const EdgeColoring& col) {
  if (col.order() != g.order())
    throw std::invalid_argument("coloring order does not match graph");
  if (col.color_count() != chromatic_index_complete(g.order()))
    throw std::invalid_argument(
        "color count must equal the chromatic index of the complete graph");
  int n = g.order();
  std::vector<uint64_t> seen(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    int c = col.color(u, v);
    if (c == EdgeColoring::kUnassigned)
      return {ProperStatus::incomplete, u, -1};
    for (int w : {u, v}) {
      if (seen[w] >> c & 1) return {ProperStatus::improper, w, c};
      seen[w] |= uint64_t{1} << c;
    }
  }
  return {ProperStatus::proper};
}

struct Extension {
  int u, v, color;
};

/// For a total proper coloring, finds the lexicographically smallest
/// (u, v, c) such that uv is a non-edge and neither endpoint sees color c,
/// i.e. an edge that could be added keeping the coloring proper. Returns
/// nullopt exactly when the coloring is maximal.
inline std::optional<Extension> find_extension(const Graph& g,
                                               const EdgeColoring& col) {
  ProperCheck pc = check_proper(g, col);
  if (pc.status != ProperStatus::proper)
    throw std::invalid_argument("find_extension needs a total proper coloring");
  int k = col.color_count();
  uint64_t all = k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
  std::vector<uint64_t> pal = palettes(g, col);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      uint64_t open = all & ~(pal[u] | pal[v]);
      if (open) return Extension{u, v, std::countr_zero(open)};
    }
  return std::nullopt;
}

/// Why a (graph, coloring) pair fails to be a maximal edge coloring.
enum class MaximalityDefect {
  none,
  order_mismatch,     // coloring built for a different vertex count
  wrong_color_count,  // k != chromatic_index_complete(n)
  incomplete,         // some edge left uncolored
  improper,           // color repeated at a vertex
  extendable,         // some non-edge admits a color unseen at both ends
};

struct MaximalityCheck {
  MaximalityDefect defect = MaximalityDefect::none;
  // For improper: offending vertex/color. For extendable: the extension.
  int u = -1, v = -1, color = -1;

  explicit operator bool() const { return defect == MaximalityDefect::none; }
};

inline const char* to_string(MaximalityDefect d) {
  switch (d) {
    case MaximalityDefect::none: return "ok";
    case MaximalityDefect::order_mismatch: return "order mismatch";
    case MaximalityDefect::wrong_color_count: return "wrong color count";
    case MaximalityDefect::incomplete: return "incomplete coloring";
    case MaximalityDefect::improper: return "improper coloring";
    case MaximalityDefect::extendable: return "extendable";
  }
  return "?";
}

/// Full maximality verdict: total + proper + k = chromatic_index_complete(n)
/// + no addable non-edge/color pair. Never throws on bad input; the defect
/// code says what went wrong.
inline MaximalityCheck is_maximal_edge_coloring(const Graph& g,
                                                const EdgeColoring& col) {
  if (col.order() != g.order())
    return {MaximalityDefect::order_mismatch};
  if (col.color_count() != chromatic_index_complete(g.order()))
    return {MaximalityDefect::wrong_color_count};
  ProperCheck pc = check_proper(g, col);
  if (pc.status == ProperStatus::incomplete)
    return {MaximalityDefect::incomplete, pc.vertex};
  if (pc.status == ProperStatus::improper)
    return {MaximalityDefect::improper, pc.vertex, -1, pc.color};
  if (auto ext = find_extension(g, col))
    return {MaximalityDefect::extendable, ext->u, ext->v, ext->color};
  return {};
}

/// K_n with a fixed proper coloring in chromatic_index_complete(n) colors.
/// Odd n: color({i,j}) = (i+j) mod n (each color class a near-perfect
/// matching). Even n: vertices 0..n-2 on a circle plus hub n-1; circle edges
/// get (i+j) mod (n-1), spokes {i, n-1} get (2i) mod (n-1), turning each
/// color class into a perfect matching.
inline std::pair<Graph, EdgeColoring> canonical_complete_coloring(int n) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  Graph g = Graph::complete(n);
  EdgeColoring col(n, chromatic_index_complete(n));
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) col.set(i, j, (i + j) % n);
  } else {
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n - 1; ++j) col.set(i, j, (i + j) % (n - 1));
      col.set(i, n - 1, 2 * i % (n - 1));
    }
  }
  return {std::move(g), std::move(col)};
}

}  // namespace mec
