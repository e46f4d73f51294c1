#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "mec/bounds.hpp"
#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

enum class Decision { yes, no, unknown };

struct SearchLimits {
  uint64_t node_budget = 0;  // color-assignment attempts; 0 = unlimited
  bool prefilters = true;    // graph-level necessary-condition filters
};

struct DecideOutcome {
  Decision decision = Decision::no;
  std::optional<EdgeColoring> witness;  // present iff decision == yes
  uint64_t nodes = 0;                   // assignment attempts expanded
  bool filtered = false;                // rejected before any search node
};

namespace detail {

/// Backtracking search for a total proper coloring in exactly
/// k = chromatic_index_complete(n) colors that no non-edge can extend.
/// Pruning, in order of cheapness:
///   - properness via palette bitmasks (a color must be new at both ends);
///   - color symmetry: color c may start a branch only if 0..c-1 are in use
///     (maximality is invariant under permuting colors);
///   - maximality feasibility: a non-edge pair must be able to reach a full
///     joint palette, so the number of colors it is missing can never
///     exceed its remaining uncolored incident edges.
/// Edges are ordered by descending min(endpoint degree), then
/// lexicographically, fixing high-constraint regions early.
class Decider {
 public:
  Decider(const Graph& g, const SearchLimits& lim) : g_(g), lim_(lim) {
    n_ = g.order();
    k_ = chromatic_index_complete(n_);
    all_colors_ = k_ == 0 ? 0 : (~uint64_t{0} >> (64 - k_));
  }

  DecideOutcome run() {
    DecideOutcome out;
    if (lim_.prefilters) {
      bool max_degree_ok = true;
      for (int v = 0; v < n_; ++v) max_degree_ok &= g_.degree(v) <= k_;
      if (!max_degree_ok || !degree_sum_filter(g_, k_) ||
          !independent_triple_filter(g_, k_)) {
        out.filtered = true;
        return out;
      }
    }

    edges_ = g_.edges();
    std::stable_sort(edges_.begin(), edges_.end(),
                     [&](VertexPair a, VertexPair b) {
                       int da = std::min(g_.degree(a.first), g_.degree(a.second));
                       int db = std::min(g_.degree(b.first), g_.degree(b.second));
                       if (da != db) return da > db;
                       return a < b;
                     });

    pal_.assign(n_, 0);
    uncolored_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) uncolored_[v] = g_.degree(v);
    nonedges_at_.assign(n_, {});
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!g_.has_edge(u, v)) {
          nonedges_at_[u].push_back({u, v});
          nonedges_at_[v].push_back({u, v});
        }

    // A pair already missing more colors than it has uncolored incident
    // edges can never be satisfied; catches isolated-ish vertices even when
    // prefilters are off.
    for (int u = 0; u < n_; ++u)
      for (auto [x, y] : nonedges_at_[u])
        if (x == u && k_ > uncolored_[x] + uncolored_[y]) return out;

    assignment_.assign(edges_.size(), -1);
    Decision d = extend(0, 0);
    out.decision = d;
    out.nodes = nodes_;
    if (d == Decision::yes) {
      EdgeColoring col(n_, k_);
      for (size_t i = 0; i < edges_.size(); ++i)
        col.set(edges_[i].first, edges_[i].second, assignment_[i]);
      out.witness = std::move(col);
      // Witnesses are re-checked with the independent verifier; the search
      // must never hand out anything it would not accept.
      if (!is_maximal_edge_coloring(g_, *out.witness))
        throw std::logic_error("search produced a non-witness");
    }
    return out;
  }

 private:
  Decision extend(size_t i, int used) {
    if (i == edges_.size())
      return leaf_is_maximal() ? Decision::yes : Decision::no;
    // Every witness uses all k colors (a color unseen anywhere would extend
    // any non-edge; complete graphs need all k by a counting argument), so
    // the uncolored edges must at least cover the unused colors.
    if (k_ - used > static_cast<int>(edges_.size() - i)) return Decision::no;
    auto [u, v] = edges_[i];
    int limit = std::min(used + 1, k_);
    bool budget_hit = false;
    for (int c = 0; c < limit; ++c) {
      if ((pal_[u] | pal_[v]) >> c & 1) continue;
      if (lim_.node_budget && nodes_ >= lim_.node_budget) {
        budget_hit = true;
        break;
      }
      ++nodes_;
      pal_[u] |= uint64_t{1} << c;
      pal_[v] |= uint64_t{1} << c;
      --uncolored_[u];
      --uncolored_[v];
      bool feasible = pairs_feasible(u) && pairs_feasible(v);
      if (feasible) {
        assignment_[i] = c;
        Decision d = extend(i + 1, std::max(used, c + 1));
        if (d == Decision::yes) return d;
        if (d == Decision::unknown) budget_hit = true;
        assignment_[i] = -1;
      }
      pal_[u] &= ~(uint64_t{1} << c);
      pal_[v] &= ~(uint64_t{1} << c);
      ++uncolored_[u];
      ++uncolored_[v];
      if (budget_hit) break;
    }
    return budget_hit ? Decision::unknown : Decision::no;
  }

  bool pairs_feasible(int w) const {
    for (auto [x, y] : nonedges_at_[w]) {
      int missing = k_ - std::popcount(pal_[x] | pal_[y]);
      if (missing > uncolored_[x] + uncolored_[y]) return false;
    }
    return true;
  }

  bool leaf_is_maximal() const {
    for (int u = 0; u < n_; ++u)
      for (auto [x, y] : nonedges_at_[u])
        if (x == u && (pal_[x] | pal_[y]) != all_colors_) return false;
    return true;
  }

  const Graph& g_;
  SearchLimits lim_;
  int n_, k_;
  uint64_t all_colors_;
  std::vector<VertexPair> edges_;
  std::vector<uint64_t> pal_;
  std::vector<int> uncolored_;
  std::vector<std::vector<VertexPair>> nonedges_at_;
  std::vector<int> assignment_;
  uint64_t nodes_ = 0;
};

}  // namespace detail

/// Budgeted decision: does g admit a maximal edge coloring? "unknown" is
/// only possible when a node budget is set and exhausted before the space
/// was covered.
inline DecideOutcome decide_mec_coloring(const Graph& g,
                                         const SearchLimits& lim = {}) {
  return detail::Decider(g, lim).run();
}

/// Unbudgeted convenience wrapper: a witness coloring or nullopt.
inline std::optional<EdgeColoring> exists_mec_coloring(const Graph& g) {
  return decide_mec_coloring(g).witness;
}

/// Independent oracle: literally try all k^m total colorings in
/// lexicographic order, validating each with the standalone verifier. No
/// pruning, no symmetry breaking, no shared code with the real search
/// beyond the verifier itself. Guarded to tiny instances.
inline std::optional<EdgeColoring> brute_force_exists_mec_coloring(
    const Graph& g) {
  int k = chromatic_index_complete(g.order());
  int m = g.size();
  double work = 1;
  for (int i = 0; i < m; ++i) work *= k;
  if (k > 7 || work > 1e7)
    throw std::invalid_argument(
        "brute-force oracle is restricted to k <= 7 and k^m <= 1e7");
  auto edges = g.edges();
  std::vector<int> digits(static_cast<size_t>(m), 0);
  while (true) {
    EdgeColoring col(g.order(), k);
    for (int i = 0; i < m; ++i) col.set(edges[i].first, edges[i].second, digits[i]);
    if (is_maximal_edge_coloring(g, col)) return col;
    int pos = m - 1;
    while (pos >= 0 && digits[pos] == k - 1) digits[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++digits[pos];
  }
}

}  // namespace mec
