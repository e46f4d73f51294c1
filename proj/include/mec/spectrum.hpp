#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mec/bounds.hpp"
#include "mec/certificate.hpp"
#include "mec/enumerate.hpp"
#include "mec/search.hpp"

namespace mec {

enum class Verdict { member, nonmember_exhausted, nonmember_theorem, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::nonmember_exhausted: return "nonmember-exhausted";
    case Verdict::nonmember_theorem: return "nonmember-theorem";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

struct EntryStats {
  uint64_t enumerated = 0;  // isomorphism classes examined for this m
  uint64_t survived = 0;    // of those, how many passed the prefilters
  uint64_t nodes = 0;       // total backtracking nodes spent
};

/// Final verdict for one (n, m) pair. Member entries always carry a
/// re-verifiable certificate; theorem entries carry the rule tag; unknown
/// means a budget or an interrupt cut the run short of exhaustion.
struct SpectrumEntry {
  int n = 0;
  long long m = 0;
  Verdict verdict = Verdict::unknown;
  std::optional<Certificate> certificate;
  std::string tag;
  EntryStats stats;
  bool complete = false;
};

struct SearchConfig {
  int workers = 1;
  uint64_t node_budget = 0;   // per-graph decision budget, 0 = unlimited
  uint64_t class_budget = 0;  // enumeration budget, 0 = unlimited
  bool prefilters = true;
  bool theorem_shortcuts = true;
  std::atomic<bool>* stop = nullptr;  // cooperative cancellation
};

/// Published nonmember facts usable as shortcuts. Only negative verdicts
/// can come from theory: membership always needs a concrete witness.
inline std::optional<std::string> theorem_nonmember_tag(int n, long long m) {
  long long full = static_cast<long long>(n) * (n - 1) / 2;
  LowerBound lb = mec_lower_bound(n);
  if (lb.tag != kTagNotCovered && m < lb.value) return lb.tag;
  if (n >= 10 && n % 4 == 2 && m == static_cast<long long>(n) * n / 4 + 1)
    return std::string(kTagExcludeQuarterPlusOne);
  if (n > 10 && n % 2 == 0 && m == full - 1)
    return std::string(kTagExcludeCompleteMinusOne);
  return std::nullopt;
}

inline nlohmann::ordered_json entry_to_json(const SpectrumEntry& e) {
  nlohmann::ordered_json j;
  j["n"] = e.n;
  j["m"] = e.m;
  j["verdict"] = to_string(e.verdict);
  if (e.certificate) j["certificate"] = certificate_to_json(*e.certificate);
  if (!e.tag.empty()) j["tag"] = e.tag;
  j["stats"] = {{"enumerated", e.stats.enumerated},
                {"survived", e.stats.survived},
                {"nodes", e.stats.nodes}};
  j["complete"] = e.complete;
  return j;
}

struct SpectrumRun {
  std::vector<SpectrumEntry> entries;  // ascending m
  bool complete = true;  // false iff any entry is short of exhaustion
  bool interrupted = false;

  std::vector<long long> member_set() const {
    std::vector<long long> out;
    for (const auto& e : entries)
      if (e.verdict == Verdict::member) out.push_back(e.m);
    return out;
  }
  std::vector<long long> unknown_set() const {
    std::vector<long long> out;
    for (const auto& e : entries)
      if (e.verdict == Verdict::unknown) out.push_back(e.m);
    return out;
  }
};

namespace detail {

/// Streams (graph, target m) items through budgeted per-graph decisions.
/// Work is batched: a batch is decided in parallel, then applied strictly
/// in stream order, so verdicts, witnesses and statistics are identical for
/// any worker count (items whose entry got decided earlier in the stream
/// are dropped at apply time, exactly as a sequential run would skip them).
class SpectrumDriver {
 public:
  SpectrumDriver(int n, const SearchConfig& cfg,
                 const std::set<long long>& search_targets,
                 std::function<void(const SpectrumEntry&)> emit)
      : n_(n), cfg_(cfg), emit_(std::move(emit)) {
    for (long long m : search_targets) {
      EntryState st;
      st.entry.n = n;
      st.entry.m = m;
      states_.emplace(m, std::move(st));
    }
    batch_capacity_ = cfg_.workers > 1 ? size_t(cfg_.workers) * 4 : 1;
  }

  bool wants(long long m) const {
    auto it = states_.find(m);
    return it != states_.end() && !it->second.member();
  }

  bool all_members() const {
    for (const auto& [m, st] : states_)
      if (!st.member()) return false;
    return true;
  }

  bool stopped() const { return cfg_.stop && cfg_.stop->load(); }

  /// Returns false when the caller should stop feeding (all targets have
  /// witnesses, or a cooperative stop was requested).
  bool feed(Graph g, long long target) {
    if (stopped()) return false;
    if (wants(target)) {
      batch_.push_back({std::move(g), target});
      if (batch_.size() >= batch_capacity_) process_batch();
    }
    return !all_members() && !stopped();
  }

  /// stream_exhausted: the item source delivered everything it had.
  SpectrumRun finish(bool stream_exhausted) {
    process_batch();
    SpectrumRun run;
    run.interrupted = stopped();
    bool exhausted = stream_exhausted && !run.interrupted;
    for (auto& [m, st] : states_) {
      if (!st.member()) {
        if (exhausted && !st.had_unknown) {
          st.entry.verdict = Verdict::nonmember_exhausted;
          st.entry.complete = true;
        } else {
          st.entry.verdict = Verdict::unknown;
          st.entry.complete = false;
        }
        emit_(st.entry);
      }
      run.complete &= st.entry.complete;
      run.entries.push_back(st.entry);
    }
    return run;
  }

 private:
  struct Item {
    Graph graph;
    long long target;
  };

  struct EntryState {
    SpectrumEntry entry;
    bool had_unknown = false;
    bool member() const { return entry.verdict == Verdict::member; }
  };

  void process_batch() {
    if (batch_.empty()) return;
    size_t count = batch_.size();
    std::vector<DecideOutcome> results(count);
    SearchLimits lim{cfg_.node_budget, cfg_.prefilters};
    if (cfg_.workers <= 1 || count == 1) {
      for (size_t i = 0; i < count; ++i)
        results[i] = decide_mec_coloring(batch_[i].graph, lim);
    } else {
      std::atomic<size_t> next{0};
      size_t nthreads = std::min(count, size_t(cfg_.workers));
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
          for (size_t i; (i = next.fetch_add(1)) < count;)
            results[i] = decide_mec_coloring(batch_[i].graph, lim);
        });
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < count; ++i) apply(batch_[i], results[i]);
    batch_.clear();
  }

  void apply(const Item& item, const DecideOutcome& out) {
    EntryState& st = states_.at(item.target);
    if (st.member()) return;  // a streamwise-earlier item already decided it
    ++st.entry.stats.enumerated;
    if (!out.filtered) ++st.entry.stats.survived;
    st.entry.stats.nodes += out.nodes;
    switch (out.decision) {
      case Decision::yes:
        st.entry.verdict = Verdict::member;
        st.entry.certificate = encode_certificate(item.graph, *out.witness);
        st.entry.complete = true;
        emit_(st.entry);
        break;
      case Decision::unknown:
        st.had_unknown = true;
        break;
      case Decision::no:
        break;
    }
  }

  int n_;
  SearchConfig cfg_;
  std::function<void(const SpectrumEntry&)> emit_;
  std::map<long long, EntryState> states_;
  std::vector<Item> batch_;
  size_t batch_capacity_;
};

inline void no_emit(const SpectrumEntry&) {}

inline std::optional<SpectrumEntry> shortcut_entry(
    int n, long long m, const SearchConfig& cfg,
    const std::function<void(const SpectrumEntry&)>& emit) {
  if (!cfg.theorem_shortcuts) return std::nullopt;
  auto tag = theorem_nonmember_tag(n, m);
  if (!tag) return std::nullopt;
  SpectrumEntry e;
  e.n = n;
  e.m = m;
  e.verdict = Verdict::nonmember_theorem;
  e.tag = *tag;
  e.complete = true;
  emit(e);
  return e;
}

/// Runs the internal enumerator over every class needed to decide the given
/// targets, using complements for targets denser than half the possible
/// edges so complete-graph-adjacent targets stay cheap.
inline SpectrumRun run_with_enumeration(
    int n, const std::set<long long>& targets, const SearchConfig& cfg,
    const std::function<void(const SpectrumEntry&)>& emit) {
  SpectrumDriver driver(n, cfg, targets, emit);
  long long full = pair_count(n);
  int max_level = -1;
  for (long long m : targets) {
    long long level = m > full / 2 ? full - m : m;
    max_level = std::max(max_level, static_cast<int>(level));
  }
  if (max_level < 0 || targets.empty()) return driver.finish(true);

  bool exhausted = true;
  try {
    exhausted = enumerate_up_to(
        n, max_level,
        [&](const Graph& g) {
          long long m = g.size();
          bool keep_going = true;
          if (driver.wants(m)) keep_going = driver.feed(g, m);
          long long co = full - m;
          if (keep_going && co > full / 2 && driver.wants(co))
            keep_going = driver.feed(g.complement(), co);
          return keep_going;
        },
        EnumerateOptions{cfg.class_budget});
  } catch (const EnumerationBudgetExceeded&) {
    exhausted = false;
  }
  // An early visitor stop because every target found its witness still
  // counts as a complete answer; only interrupts and budget truncation
  // leave unknowns, which finish() works out per entry.
  return driver.finish(exhausted || driver.all_members());
}

}  // namespace detail

/// Decides a single (n, m): theorem shortcut when allowed, exhaustive
/// search over one representative per isomorphism class otherwise.
inline SpectrumEntry exists_mec(
    int n, long long m, const SearchConfig& cfg = {},
    const std::function<void(const SpectrumEntry&)>& emit = detail::no_emit) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  long long full = pair_count(n);
  if (m < 0 || m > full)
    throw std::invalid_argument("edge count out of range for this order");
  if (auto e = detail::shortcut_entry(n, m, cfg, emit)) return *e;
  SpectrumRun run = detail::run_with_enumeration(n, {m}, cfg, emit);
  return run.entries.at(0);
}

/// Computes MEC(n) entry-by-entry for m = 0..n(n-1)/2. Theorem-decidable
/// entries are emitted first (ascending m) when shortcuts are on; the rest
/// are decided by one shared enumeration pass. Entry emission order and
/// content are independent of the worker count.
inline SpectrumRun compute_spectrum(
    int n, const SearchConfig& cfg = {},
    const std::function<void(const SpectrumEntry&)>& emit = detail::no_emit) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  long long full = pair_count(n);
  std::vector<SpectrumEntry> shortcut_entries;
  std::set<long long> targets;
  for (long long m = 0; m <= full; ++m) {
    if (auto e = detail::shortcut_entry(n, m, cfg, emit))
      shortcut_entries.push_back(std::move(*e));
    else
      targets.insert(m);
  }
  SpectrumRun run = detail::run_with_enumeration(n, targets, cfg, emit);
  for (auto& e : shortcut_entries) run.entries.push_back(std::move(e));
  std::sort(run.entries.begin(), run.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return a.m < b.m;
            });
  return run;
}

/// Decides targets against an externally supplied graph stream instead of
/// the internal enumerator (cross-validation against other generators).
/// Graphs whose edge count is not a requested target are ignored;
/// "exhausted" then means: every relevant graph the stream offered was
/// decided. The stream is trusted to be isomorph-free and complete.
inline SpectrumRun decide_graph_stream(
    int n, const std::vector<Graph>& graphs, const std::set<long long>& targets,
    const SearchConfig& cfg = {},
    const std::function<void(const SpectrumEntry&)>& emit = detail::no_emit) {
  for (const Graph& g : graphs)
    if (g.order() != n)
      throw std::invalid_argument("stream contains a graph of wrong order");
  detail::SpectrumDriver driver(n, cfg, targets, emit);
  bool ran_dry = true;
  for (const Graph& g : graphs) {
    long long m = g.size();
    if (!driver.wants(m)) continue;
    if (!driver.feed(g, m)) {
      ran_dry = driver.all_members();
      break;
    }
  }
  return driver.finish(ran_dry && !driver.stopped());
}

/// exists_mec against an external stream: shortcut still applies, anything
/// else is decided from the supplied graphs only.
inline SpectrumEntry exists_mec_from_stream(
    int n, long long m, const std::vector<Graph>& graphs,
    const SearchConfig& cfg = {},
    const std::function<void(const SpectrumEntry&)>& emit = detail::no_emit) {
  if (auto e = detail::shortcut_entry(n, m, cfg, emit)) return *e;
  SpectrumRun run = decide_graph_stream(n, graphs, {m}, cfg, emit);
  return run.entries.at(0);
}

/// compute_spectrum against an external stream.
inline SpectrumRun compute_spectrum_from_stream(
    int n, const std::vector<Graph>& graphs, const SearchConfig& cfg = {},
    const std::function<void(const SpectrumEntry&)>& emit = detail::no_emit) {
  long long full = pair_count(n);
  std::vector<SpectrumEntry> shortcut_entries;
  std::set<long long> targets;
  for (long long m = 0; m <= full; ++m) {
    if (auto e = detail::shortcut_entry(n, m, cfg, emit))
      shortcut_entries.push_back(std::move(*e));
    else
      targets.insert(m);
  }
  SpectrumRun run = decide_graph_stream(n, graphs, targets, cfg, emit);
  for (auto& e : shortcut_entries) run.entries.push_back(std::move(e));
  std::sort(run.entries.begin(), run.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return a.m < b.m;
            });
  return run;
}

}  // namespace mec
