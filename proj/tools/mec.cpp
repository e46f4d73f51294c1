// Command-line front end: verify / bounds / search / spectrum.
//
// Output contract: stdout carries only deterministic, machine-readable
// NDJSON (one record per line; flushed per line so interrupts never leave a
// torn record). Timing and progress chatter go to stderr. Exit codes:
//   0  success (verified / run complete / member found)
//   1  valid run, negative verdict (invalid certificate / nonmember)
//   2  input error (bad flags, malformed files, infeasible order)
//   3  incomplete (budget or interrupt left unknown entries)

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mec/bounds.hpp"
#include "mec/certificate.hpp"
#include "mec/coloring.hpp"
#include "mec/graph6.hpp"
#include "mec/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIncomplete = 3;

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true); }

void print_line(const nlohmann::ordered_json& j) {
  std::cout << j.dump() << "\n" << std::flush;
}

int env_default_workers() {
  if (const char* raw = std::getenv("MEC_WORKERS")) {
    int w = std::atoi(raw);
    if (w >= 1) return w;
  }
  return 1;
}

struct CommonFlags {
  int workers = env_default_workers();
  uint64_t node_budget = 0;
  uint64_t class_budget = 0;
  bool no_shortcuts = false;
  std::string graphs_from;

  mec::SearchConfig config() const {
    mec::SearchConfig cfg;
    cfg.workers = workers;
    cfg.node_budget = node_budget;
    cfg.class_budget = class_budget;
    cfg.theorem_shortcuts = !no_shortcuts;
    cfg.stop = &g_stop;
    return cfg;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--workers", f.workers,
                  "parallel decision workers (default: MEC_WORKERS or 1)")
      ->check(CLI::Range(1, 512));
  cmd->add_option("--budget", f.node_budget,
                  "per-graph node budget; graphs hitting it become unknown");
  cmd->add_option("--graph-budget", f.class_budget,
                  "cap on enumerated isomorphism classes for the whole run");
  cmd->add_flag("--no-theorem-shortcuts", f.no_shortcuts,
                "decide every entry by search even where a published "
                "result settles it");
  cmd->add_option("--graphs-from", f.graphs_from,
                  "read candidate graphs from a graph6 file instead of "
                  "enumerating internally");
}

std::vector<mec::Graph> load_graph6_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::vector<mec::Graph> graphs = mec::read_graph6_stream(in);
  for (const mec::Graph& g : graphs)
    if (g.order() != n)
      throw std::invalid_argument("graph of order " +
                                  std::to_string(g.order()) + " in " + path +
                                  " does not match n=" + std::to_string(n));
  return graphs;
}

nlohmann::ordered_json run_header(const std::string& command, int n,
                                  std::optional<long long> m,
                                  const CommonFlags& f) {
  nlohmann::ordered_json j;
  j["type"] = "run";
  j["command"] = command;
  j["n"] = n;
  if (m) j["m"] = *m;
  j["workers"] = f.workers;
  j["node_budget"] = f.node_budget;
  j["class_budget"] = f.class_budget;
  j["theorem_shortcuts"] = !f.no_shortcuts;
  j["source"] = f.graphs_from.empty() ? std::string("internal")
                                      : "file:" + f.graphs_from;
  return j;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  nlohmann::ordered_json report;
  report["type"] = "verify";
  report["file"] = path;
  try {
    mec::Certificate cert = mec::certificate_from_string(buf.str());
    auto [g, col] = mec::decode_certificate(cert);
    report["valid"] = true;
    report["n"] = cert.n;
    report["m"] = cert.m();
    report["k"] = cert.k;
    print_line(report);
    return kExitOk;
  } catch (const mec::CertificateError& e) {
    report["valid"] = false;
    report["error"] = e.what();
    using Code = mec::CertificateError::Code;
    switch (e.code()) {
      case Code::malformed:
        report["reason"] = "malformed";
        print_line(report);
        return kExitInputError;
      case Code::vertex_out_of_range:
        report["reason"] = "vertex out of range";
        break;
      case Code::color_out_of_range:
        report["reason"] = "color out of range";
        break;
      case Code::rejected:
        report["reason"] = "rejected";
        break;
    }
    print_line(report);
    return kExitNegative;
  }
}

int cmd_bounds(int n) {
  using mec::Parity;
  nlohmann::ordered_json j;
  j["type"] = "bounds";
  j["n"] = n;
  mec::LowerBound lb = mec::mec_lower_bound(n);
  j["lower_bound"] = {{"value", lb.value}, {"tag", lb.tag}};
  if (n >= 4) {
    j["quadratic_root_even"] =
        mec::degree_sum_quadratic_root(n, Parity::even).str();
    j["quadratic_root_odd"] =
        mec::degree_sum_quadratic_root(n, Parity::odd).str();
  }
  mec::SpectrumPrediction p = mec::predicted_spectrum(n);
  nlohmann::ordered_json pj;
  pj["status"] = p.covered() ? "complete" : "requires-search";
  if (p.covered()) {
    pj["m_lo"] = p.m_lo;
    pj["m_hi"] = p.m_hi;
    pj["exclusions"] = p.exclusions;
  }
  pj["tags"] = p.tags;
  j["prediction"] = pj;
  j["validity"] = {
      {"even_lower_bound", "n >= 4 even"},
      {"odd_lower_bound", "n >= 9 odd"},
      {"quarter_plus_one_exclusion", "n >= 10, n = 2 (mod 4)"},
      {"complete_minus_one_exclusion", "n > 10 even"},
      {"closed_form_spectrum", "n >= 11"},
  };
  print_line(j);
  return kExitOk;
}

void print_summary(const mec::SpectrumRun& run, int n) {
  nlohmann::ordered_json j;
  j["type"] = "summary";
  j["n"] = n;
  j["members"] = run.member_set();
  j["unknown"] = run.unknown_set();
  j["complete"] = run.complete;
  j["interrupted"] = run.interrupted;
  print_line(j);
}

int finish_code(const mec::SpectrumRun& run) {
  return run.complete ? kExitOk : kExitIncomplete;
}

int cmd_search(int n, long long m, const CommonFlags& flags) {
  print_line(run_header("search", n, m, flags));
  mec::SearchConfig cfg = flags.config();
  auto emit = [](const mec::SpectrumEntry& e) { print_line(entry_to_json(e)); };

  mec::SpectrumEntry entry;
  mec::SpectrumRun run;
  if (flags.graphs_from.empty()) {
    entry = mec::exists_mec(n, m, cfg, emit);
  } else {
    entry = mec::exists_mec_from_stream(n, m, load_graph6_file(flags.graphs_from, n),
                                        cfg, emit);
  }
  run.entries = {entry};
  run.complete = entry.complete;
  print_summary(run, n);
  switch (entry.verdict) {
    case mec::Verdict::member: return kExitOk;
    case mec::Verdict::nonmember_exhausted:
    case mec::Verdict::nonmember_theorem: return kExitNegative;
    case mec::Verdict::unknown: return kExitIncomplete;
  }
  return kExitIncomplete;
}

int cmd_spectrum(int n, const CommonFlags& flags) {
  print_line(run_header("spectrum", n, std::nullopt, flags));
  mec::SearchConfig cfg = flags.config();
  auto emit = [](const mec::SpectrumEntry& e) { print_line(entry_to_json(e)); };

  mec::SpectrumRun run =
      flags.graphs_from.empty()
          ? mec::compute_spectrum(n, cfg, emit)
          : mec::compute_spectrum_from_stream(
                n, load_graph6_file(flags.graphs_from, n), cfg, emit);
  print_summary(run, n);
  return finish_code(run);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact maximal-edge-coloring verifier and spectrum search"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "check a certificate file and report the first violation");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate JSON file")
      ->required();

  auto* bounds = app.add_subcommand(
      "bounds", "closed-form bounds, exclusions and spectrum prediction");
  int bounds_n = 0;
  bounds->add_option("n", bounds_n, "graph order (n >= 3)")->required();

  auto* search = app.add_subcommand(
      "search", "decide whether some n-vertex, m-edge graph admits a "
                "maximal edge coloring");
  int search_n = 0;
  long long search_m = 0;
  CommonFlags search_flags;
  search->add_option("n", search_n, "graph order")->required();
  search->add_option("m", search_m, "edge count")->required();
  add_common_flags(search, search_flags);

  auto* spectrum = app.add_subcommand(
      "spectrum", "decide every edge count 0..n(n-1)/2 for the given order");
  int spectrum_n = 0;
  CommonFlags spectrum_flags;
  spectrum->add_option("n", spectrum_n, "graph order")->required();
  add_common_flags(spectrum, spectrum_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  auto started = std::chrono::steady_clock::now();
  int code = kExitInputError;
  try {
    if (app.got_subcommand(verify)) {
      code = cmd_verify(cert_path);
    } else if (app.got_subcommand(bounds)) {
      if (bounds_n < 3) {
        std::cerr << "error: bounds needs n >= 3\n";
        return kExitInputError;
      }
      code = cmd_bounds(bounds_n);
    } else if (app.got_subcommand(search)) {
      code = cmd_search(search_n, search_m, search_flags);
    } else if (app.got_subcommand(spectrum)) {
      code = cmd_spectrum(spectrum_n, spectrum_flags);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "run finished in " << elapsed << " ms\n";
  return code;
}
