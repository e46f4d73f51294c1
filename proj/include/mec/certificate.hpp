#pragma once

#include <array>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

/// Serialized witness that some graph of order n admits a maximal edge
/// coloring: the full colored edge list, plus an optional free-text note.
/// Canonical form keeps edges sorted by (u, v) with u < v.
struct Certificate {
  int n = 0;
  int k = 0;
  std::vector<std::array<int, 3>> edges;  // (u, v, color)
  std::string note;                       // empty = absent

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const Certificate&) const = default;
};

class CertificateError : public std::runtime_error {
 public:
  enum class Code {
    malformed,             // not the expected JSON shape
    vertex_out_of_range,   // vertex index outside 0..n-1 (or self-loop)
    color_out_of_range,    // color outside 0..k-1
    rejected,              // decodes fine but fails the maximality verifier
  };

  CertificateError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Builds a certificate from a verified maximal edge coloring. Refuses
/// anything the verifier rejects so certificates are valid by construction.
inline Certificate encode_certificate(const Graph& g, const EdgeColoring& col,
                                      std::string note = "") {
  MaximalityCheck mc = is_maximal_edge_coloring(g, col);
  if (!mc)
    throw std::invalid_argument(
        std::string("refusing to encode a non-witness: ") +
        to_string(mc.defect));
  Certificate cert;
  cert.n = g.order();
  cert.k = col.color_count();
  for (auto [u, v] : g.edges()) cert.edges.push_back({u, v, col.color(u, v)});
  std::sort(cert.edges.begin(), cert.edges.end());
  cert.note = std::move(note);
  return cert;
}

/// Rebuilds (graph, coloring) from a certificate and re-verifies it. Throws
/// CertificateError with a distinct code per failure class.
inline std::pair<Graph, EdgeColoring> decode_certificate(
    const Certificate& cert) {
  using Code = CertificateError::Code;
  if (cert.n < 1 || cert.n > Graph::kMaxOrder)
    throw CertificateError(Code::malformed, "order out of range");
  if (cert.k != chromatic_index_complete(cert.n))
    throw CertificateError(Code::malformed,
                           "color count does not match the order");
  Graph g(cert.n);
  EdgeColoring col(cert.n, std::max(cert.k, 0));
  for (auto [u, v, c] : cert.edges) {
    if (u < 0 || u >= cert.n || v < 0 || v >= cert.n || u == v)
      throw CertificateError(Code::vertex_out_of_range,
                             "vertex out of range in edge list");
    if (c < 0 || c >= cert.k)
      throw CertificateError(Code::color_out_of_range, "color out of range");
    if (g.has_edge(u, v))
      throw CertificateError(Code::malformed, "duplicate edge in list");
    g.add_edge(u, v);
    col.set(u, v, c);
  }
  if (MaximalityCheck mc = is_maximal_edge_coloring(g, col); !mc)
    throw CertificateError(
        Code::rejected,
        std::string("certificate fails verification: ") + to_string(mc.defect));
  return {std::move(g), std::move(col)};
}

/// JSON layer. Shape: {"n": int, "k": int, "edges": [[u,v,color], ...],
/// "note": string?} with "note" omitted when empty.
inline nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v, c] : cert.edges) j["edges"].push_back({u, v, c});
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  using Code = CertificateError::Code;
  if (!j.is_object() || !j.contains("n") || !j.contains("k") ||
      !j.contains("edges") || !j["n"].is_number_integer() ||
      !j["k"].is_number_integer() || !j["edges"].is_array())
    throw CertificateError(Code::malformed,
                           "expected {n, k, edges[, note]} object");
  Certificate cert;
  cert.n = j["n"].get<int>();
  cert.k = j["k"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw CertificateError(Code::malformed,
                             "edge entries must be [u, v, color]");
    cert.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  if (j.contains("note")) {
    if (!j["note"].is_string())
      throw CertificateError(Code::malformed, "note must be a string");
    cert.note = j["note"].get<std::string>();
  }
  return cert;
}

inline std::string certificate_to_string(const Certificate& cert) {
  return certificate_to_json(cert).dump();
}

inline Certificate certificate_from_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw CertificateError(CertificateError::Code::malformed,
                           "certificate is not valid JSON");
  return certificate_from_json(j);
}

}  // namespace mec
