#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mec/canonical.hpp"
#include "mec/graph.hpp"

namespace mec {

/// Isomorph-free exhaustive generation by canonical augmentation: grow
/// graphs one edge at a time, trying only one non-edge per automorphism
/// orbit of the parent, and keep a child exactly when the edge just added
/// lies in the child's automorphism orbit of its canonical deletion edge
/// (the edge occupying the highest slot of the canonical adjacency string).
/// Each isomorphism class is then visited exactly once, with no global
/// "seen" set, and the visit order is deterministic.

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  explicit EnumerationBudgetExceeded(uint64_t budget)
      : std::runtime_error("class budget of " + std::to_string(budget) +
                           " exhausted before the stream completed"),
        budget(budget) {}
  uint64_t budget;
};

struct EnumerateOptions {
  // Hard cap on classes visited across all levels; 0 = unlimited. Exceeding
  // it raises EnumerationBudgetExceeded so a truncated stream is never
  // mistaken for a complete one.
  uint64_t class_budget = 0;
};

namespace detail {

/// Edge in the highest canonical slot: maximize the canonical pair index of
/// the endpoints' positions. This is a function of the isomorphism class
/// (plus its canonical labeling), which is what augmentation acceptance
/// needs.
inline int canonical_deletion_pair_index(const Graph& g,
                                         const std::vector<int>& labeling) {
  int best_idx = -1, best_u = -1, best_v = -1;
  for (auto [u, v] : g.edges()) {
    int p = labeling[u], q = labeling[v];
    if (p > q) std::swap(p, q);
    int idx = pair_bit_index(p, q);
    if (idx > best_idx) {
      best_idx = idx;
      best_u = u;
      best_v = v;
    }
  }
  return best_u < best_v ? pair_bit_index(best_u, best_v)
                         : pair_bit_index(best_v, best_u);
}

class Enumerator {
 public:
  Enumerator(int n, int max_m, std::function<bool(const Graph&)> visit,
             EnumerateOptions opt)
      : n_(n), max_m_(max_m), visit_(std::move(visit)), opt_(opt) {}

  /// Returns false iff the visitor stopped the stream early.
  bool run() {
    Graph root(n_);
    CanonicalForm cf = canonical_form(root);
    // The empty graph's group is the full symmetric group; hand the exact
    // generators over rather than relying on discovery at the most
    // symmetric node of the whole tree.
    if (n_ >= 2) {
      std::vector<int> swap01(n_), cycle(n_);
      for (int i = 0; i < n_; ++i) {
        swap01[i] = i < 2 ? 1 - i : i;
        cycle[i] = (i + 1) % n_;
      }
      cf.generators = {swap01, cycle};
    }
    return dfs(root, cf);
  }

 private:
  bool dfs(const Graph& g, const CanonicalForm& cf) {
    if (opt_.class_budget && ++visited_ > opt_.class_budget)
      throw EnumerationBudgetExceeded(opt_.class_budget);
    if (!visit_(g)) return false;
    if (g.size() >= max_m_) return true;

    std::vector<int> orbit = pair_orbits(n_, cf.generators);
    std::vector<char> orbit_tried(static_cast<size_t>(pair_count(n_)), 0);
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v)) continue;
        int rep = orbit[pair_bit_index(u, v)];
        if (orbit_tried[rep]) continue;
        orbit_tried[rep] = 1;

        Graph child = g;
        child.add_edge(u, v);
        CanonicalForm ccf = canonical_form(child);
        std::vector<int> corbit = pair_orbits(n_, ccf.generators);
        int star = canonical_deletion_pair_index(child, ccf.labeling);
        if (corbit[pair_bit_index(u, v)] != corbit[star]) continue;
        if (!dfs(child, ccf)) return false;
      }
    return true;
  }

  int n_;
  int max_m_;
  std::function<bool(const Graph&)> visit_;
  EnumerateOptions opt_;
  uint64_t visited_ = 0;
};

}  // namespace detail

/// Visits one representative per isomorphism class for every edge count
/// 0..max_m (inclusive), in deterministic order. The visitor returning
/// false stops the stream early (returns false); a class budget overrun
/// throws EnumerationBudgetExceeded instead of truncating silently.
inline bool enumerate_up_to(int n, int max_m,
                            const std::function<bool(const Graph&)>& visit,
                            EnumerateOptions opt = {}) {
  if (n < 1 || n > 12)
    throw std::invalid_argument(
        "exhaustive enumeration is restricted to 1 <= n <= 12");
  if (max_m < 0 || max_m > pair_count(n))
    throw std::invalid_argument("edge count out of range");
  return detail::Enumerator(n, max_m, visit, opt).run();
}

/// Visits one representative per isomorphism class with exactly m edges.
/// For m above half the possible edges, the complements of the sparser
/// classes are streamed instead (complementation is an isomorphism-class
/// bijection), which keeps dense targets such as complete graphs cheap.
inline bool enumerate_graphs(int n, int m,
                             const std::function<bool(const Graph&)>& visit,
                             EnumerateOptions opt = {}) {
  int full = pair_count(n);
  if (n < 1 || n > 12)
    throw std::invalid_argument(
        "exhaustive enumeration is restricted to 1 <= n <= 12");
  if (m < 0 || m > full) throw std::invalid_argument("edge count out of range");
  bool flip = m > full / 2;
  int level = flip ? full - m : m;
  return enumerate_up_to(
      n, level,
      [&](const Graph& g) {
        if (g.size() != level) return true;
        return visit(flip ? g.complement() : g);
      },
      opt);
}

}  // namespace mec
