#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// Canonical labeling by individualization-refinement, in the style of the
/// classic canonical-labeling tools but sized for the tiny graphs this
/// project enumerates (n <= 16, so a canonical adjacency fits 128 bits).
///
/// The search tree: each node holds an ordered partition of the vertices,
/// made equitable by degree refinement; branching individualizes one vertex
/// of the first non-singleton cell. Discrete partitions (leaves) read off a
/// candidate labeling. The canonical labeling is the leaf maximizing
/// (refinement trace, adjacency bit string) lexicographically; equal leaves
/// yield automorphisms, which both prune the tree (orbit rule) and are
/// reported to callers, who rely on them generating the full group.

struct CanonicalForm {
  std::array<uint64_t, 2> bits{};  // canonical upper triangle, see pair_bit_index
  std::vector<int> labeling;       // vertex -> canonical position
  std::vector<std::vector<int>> generators;  // automorphism generators of g
  std::vector<int> vertex_orbit;   // orbit representative (smallest vertex)
};

/// Index of unordered pair {u, v} (u < v) in the fixed triangle order
/// (0,1), (0,2), (1,2), (0,3), ... — i.e. sorted by (v, u).
inline int pair_bit_index(int u, int v) { return v * (v - 1) / 2 + u; }

inline int pair_count(int n) { return n * (n - 1) / 2; }

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

inline void hash_mix(uint64_t& h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > 16)
      throw std::invalid_argument("canonical labeling limited to n <= 16");
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  CanonicalForm run() {
    std::vector<std::vector<int>> cells(1);
    cells[0].resize(n_);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    uint64_t h = 0x100;
    hash_mix(h, static_cast<uint64_t>(n_));
    hash_mix(h, static_cast<uint64_t>(g_.size()));
    refine(cells, h);
    descend(cells, h, 0, {});

    CanonicalForm out;
    out.bits = best_bits_;
    out.labeling = best_lab_;
    out.generators = generators_;
    UnionFind uf(n_);
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    out.vertex_orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.vertex_orbit[v] = uf.find(v);
    return out;
  }

 private:
  static uint64_t cell_mask(const std::vector<int>& cell) {
    uint64_t m = 0;
    for (int v : cell) m |= uint64_t{1} << v;
    return m;
  }

  /// Makes the partition equitable: every cell has uniform neighbor counts
  /// into every other cell. Split events and the final shape are folded into
  /// the trace hash; everything here depends only on cell indices, sizes and
  /// counts, so isomorphic inputs produce identical traces.
  void refine(std::vector<std::vector<int>>& cells, uint64_t& h) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t si = 0; si < cells.size() && !changed; ++si) {
        uint64_t smask = cell_mask(cells[si]);
        for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
          if (cells[ci].size() <= 1) continue;
          // Bucket the cell by neighbor count into the splitter.
          std::vector<std::pair<int, int>> by_count;  // (count, vertex)
          by_count.reserve(cells[ci].size());
          for (int v : cells[ci])
            by_count.push_back({std::popcount(adj_[v] & smask), v});
          std::sort(by_count.begin(), by_count.end());
          if (by_count.front().first == by_count.back().first) continue;

          std::vector<std::vector<int>> sub;
          std::vector<int> sub_count;
          for (auto [cnt, v] : by_count) {
            if (sub.empty() || sub_count.back() != cnt) {
              sub.emplace_back();
              sub_count.push_back(cnt);
            }
            sub.back().push_back(v);
          }
          hash_mix(h, 0x51 * si + 0x13 * ci);
          for (size_t i = 0; i < sub.size(); ++i) {
            hash_mix(h, sub[i].size());
            hash_mix(h, static_cast<uint64_t>(sub_count[i]));
          }
          cells.erase(cells.begin() + ci);
          cells.insert(cells.begin() + ci,
                       std::make_move_iterator(sub.begin()),
                       std::make_move_iterator(sub.end()));
          changed = true;
        }
      }
    }
    hash_mix(h, 0xabcd);
    for (const auto& c : cells) hash_mix(h, c.size());
  }

  static bool is_discrete(const std::vector<std::vector<int>>& cells) {
    for (const auto& c : cells)
      if (c.size() != 1) return false;
    return true;
  }

  std::array<uint64_t, 2> leaf_bits(const std::vector<int>& lab) const {
    std::array<uint64_t, 2> bits{};
    for (auto [u, v] : g_.edges()) {
      int p = lab[u], q = lab[v];
      int idx = p < q ? pair_bit_index(p, q) : pair_bit_index(q, p);
      bits[idx / 64] |= uint64_t{1} << (63 - idx % 64);
    }
    return bits;
  }

  void record_automorphism(const std::vector<int>& lab) {
    // best and current labelings produce the same relabeled graph, so
    // sigma = cur^-1 . best is an automorphism.
    std::vector<int> inv_cur(n_);
    for (int v = 0; v < n_; ++v) inv_cur[lab[v]] = v;
    std::vector<int> sigma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      sigma[v] = inv_cur[best_lab_[v]];
      identity &= sigma[v] == v;
    }
    if (identity) return;
    for (const auto& gen : generators_)
      if (gen == sigma) return;
    generators_.push_back(std::move(sigma));
  }

  void handle_leaf(const std::vector<std::vector<int>>& cells,
                   const std::vector<uint64_t>& path) {
    std::vector<int> lab(n_);
    for (size_t i = 0; i < cells.size(); ++i) lab[cells[i][0]] = int(i);
    auto bits = leaf_bits(lab);
    if (!have_best_) {
      have_best_ = true;
      best_bits_ = bits;
      best_lab_ = lab;
      best_path_ = path;
      return;
    }
    if (bits > best_bits_) {
      best_bits_ = bits;
      best_lab_ = lab;
      best_path_ = path;
    } else if (bits == best_bits_) {
      record_automorphism(lab);
    }
  }

  /// depth = number of individualizations so far; path = trace per depth.
  void descend(const std::vector<std::vector<int>>& cells, uint64_t h,
               size_t depth, std::vector<int> base) {
    // Trace comparison against the best leaf's path: a worse trace can
    // never become canonical (max objective), a better one obsoletes the
    // current best entirely.
    std::vector<uint64_t> path;  // filled lazily; see below
    if (have_best_) {
      if (depth < best_path_.size()) {
        if (h < best_path_[depth]) return;
        if (h > best_path_[depth]) {
          have_best_ = false;
          best_path_.resize(depth);
        }
      } else {
        // Equal traces imply equal partition shapes, so a leaf in the best
        // path is a leaf here too; deeper nodes mean a trace mismatch
        // upstream, which the pruning above already rejected.
        have_best_ = false;
        best_path_.resize(depth);
      }
    }

    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = int(i);
        break;
      }

    if (target < 0) {
      auto full_path = best_leaf_prefix(depth, h);
      handle_leaf(cells, full_path);
      return;
    }

    if (!have_best_) {
      best_path_.resize(depth);
      best_path_.push_back(h);
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
      if (in_orbit_of_tried(v, tried, base)) continue;
      tried.push_back(v);
      auto child = cells;
      std::vector<int> rest;
      for (int w : child[target])
        if (w != v) rest.push_back(w);
      child[target] = {v};
      child.insert(child.begin() + target + 1, std::move(rest));
      uint64_t ch = h;
      hash_mix(ch, 0x777 + static_cast<uint64_t>(target));
      refine(child, ch);
      base.push_back(v);
      descend(child, ch, depth + 1, base);
      base.pop_back();
    }
  }

  std::vector<uint64_t> best_leaf_prefix(size_t depth, uint64_t h) {
    std::vector<uint64_t> p(best_path_.begin(),
                            best_path_.begin() +
                                std::min(best_path_.size(), depth));
    p.push_back(h);
    return p;
  }

  /// Orbit rule: skip candidate v if some already-tried sibling lies in the
  /// same orbit under the automorphisms found so far that fix the current
  /// base pointwise. Such a sibling's subtree is the image of v's, so
  /// nothing new (neither a better leaf nor a new generator) lives there.
  bool in_orbit_of_tried(int v, const std::vector<int>& tried,
                         const std::vector<int>& base) {
    if (tried.empty() || generators_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int b : base)
        if (gen[b] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int w = 0; w < n_; ++w) uf.unite(w, gen[w]);
    }
    for (int u : tried)
      if (uf.find(u) == uf.find(v)) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<uint64_t> adj_;

  bool have_best_ = false;
  std::array<uint64_t, 2> best_bits_{};
  std::vector<int> best_lab_;
  std::vector<uint64_t> best_path_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

/// Canonical adjacency bits alone (the isomorphism-class key).
inline std::array<uint64_t, 2> canonical_key(const Graph& g) {
  return canonical_form(g).bits;
}

/// Orbits of unordered vertex pairs under the group generated by the given
/// permutations. Returns the orbit representative (smallest pair index) per
/// pair, indexed by pair_bit_index.
inline std::vector<int> pair_orbits(
    int n, const std::vector<std::vector<int>>& generators) {
  detail::UnionFind uf(pair_count(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& gen : generators)
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
          int a = gen[u], b = gen[v];
          int i = pair_bit_index(u, v);
          int j = a < b ? pair_bit_index(a, b) : pair_bit_index(b, a);
          if (uf.find(i) != uf.find(j)) {
            uf.unite(i, j);
            changed = true;
          }
        }
  }
  std::vector<int> orbit(pair_count(n));
  for (int i = 0; i < pair_count(n); ++i) orbit[i] = uf.find(i);
  return orbit;
}

}  // namespace mec
