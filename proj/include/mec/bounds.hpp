#pragma once

#include <string>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"
#include "mec/rational.hpp"

namespace mec {

/// Tag strings identifying which published rule produced a number. These are
/// stable API: the CLI prints them and tests match on them.
inline constexpr const char* kTagBoundEvenQuarter = "bound:even-quarter";
inline constexpr const char* kTagBoundOddQuarter = "bound:odd-quarter";
inline constexpr const char* kTagExcludeCompleteMinusOne =
    "exclude:complete-minus-one";
inline constexpr const char* kTagExcludeQuarterPlusOne =
    "exclude:quarter-plus-one";
inline constexpr const char* kTagMemberRangeEven = "member:range-even";
inline constexpr const char* kTagMemberRangeOdd = "member:range-odd";
inline constexpr const char* kTagNotCovered = "not covered by theorem";

struct LowerBound {
  long long value = 0;
  std::string tag;
};

/// Least edge count any graph of order n with a maximal edge coloring can
/// have, per the published bounds: n^2/4 for even n >= 4 and
/// (n^2 + 2n - 3)/4 for odd n >= 9 (both exact integers). Outside those
/// ranges the trivial bound 0 is returned, tagged as uncovered.
inline LowerBound mec_lower_bound(int n) {
  if (n >= 4 && n % 2 == 0)
    return {static_cast<long long>(n) * n / 4, kTagBoundEvenQuarter};
  if (n >= 9 && n % 2 == 1)
    return {(static_cast<long long>(n) * n + 2LL * n - 3) / 4,
            kTagBoundOddQuarter};
  return {0, kTagNotCovered};
}

enum class Parity { even, odd };

/// The degree-sum arguments bound m by quadratics in m:
///   even case: 8m^2 + 2n(2-3n)m + n^4 - n^3 <= 0
///   odd  case: 8m^2 - 6n^2 m + n^4 + n^3 - 2n^2 <= 0
/// This returns the exact smaller root (n^2/4 resp. n(n+2)/4 after
/// simplification) in exact rational arithmetic — no floating point.
inline Rational degree_sum_quadratic_root(int n, Parity parity) {
  if (n < 4) throw std::invalid_argument("quadratic root needs n >= 4");
  long long nn = n;
  long long a = 8, b, c;
  if (parity == Parity::even) {
    b = 2 * nn * (2 - 3 * nn);
    c = nn * nn * nn * (nn - 1);
  } else {
    b = -6 * nn * nn;
    c = nn * nn * (nn * nn + nn - 2);
  }
  long long disc = b * b - 4 * a * c;
  long long s = exact_isqrt(disc);
  if (s < 0) throw std::logic_error("discriminant unexpectedly irrational");
  return Rational(-b - s, 2 * a);
}

/// True iff every non-adjacent pair u, v has d(u) + d(v) >= t. (Vacuously
/// true on complete graphs.)
inline bool nonedge_degree_sum_at_least(const Graph& g, int t) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < t) return false;
  return true;
}

/// Necessary condition for a maximal edge coloring with k colors: a
/// non-adjacent pair must jointly see all k colors, and a vertex sees at
/// most d(v) of them.
inline bool degree_sum_filter(const Graph& g, int k) {
  return nonedge_degree_sum_at_least(g, k);
}

/// Second necessary condition: for any independent triple, each of the k
/// colors must be seen by at least two of the three vertices (a color
/// missed by two of them would violate that pair), so the degree sum is at
/// least 2k.
inline bool independent_triple_filter(const Graph& g, int k) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
        if (g.degree(a) + g.degree(b) + g.degree(c) < 2 * k) return false;
      }
    }
  return true;
}

enum class PredictionStatus { complete, requires_search };

/// What the published results say MEC(n) is. For n >= 11 the answer is
/// closed-form (status complete); for n <= 10 the literature determined the
/// sets by computer search without printing them, so callers must run the
/// search driver themselves.
struct SpectrumPrediction {
  int n = 0;
  PredictionStatus status = PredictionStatus::requires_search;
  long long m_lo = 0;  // inclusive, valid when complete
  long long m_hi = 0;  // inclusive, valid when complete
  std::vector<long long> exclusions;  // sorted, within [m_lo, m_hi]
  std::vector<std::string> tags;

  bool covered() const { return status == PredictionStatus::complete; }

  /// Membership per the prediction; only meaningful when complete.
  bool contains(long long m) const {
    if (m < m_lo || m > m_hi) return false;
    for (long long x : exclusions)
      if (x == m) return false;
    return true;
  }
};

inline SpectrumPrediction predicted_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("spectrum is defined for n >= 3");
  SpectrumPrediction p;
  p.n = n;
  long long full = static_cast<long long>(n) * (n - 1) / 2;
  if (n % 2 == 0 && n >= 12) {
    p.status = PredictionStatus::complete;
    p.m_lo = static_cast<long long>(n) * n / 4;
    p.m_hi = full;
    p.tags = {kTagMemberRangeEven, kTagBoundEvenQuarter};
    if (n % 4 == 2) {
      p.exclusions.push_back(p.m_lo + 1);
      p.tags.push_back(kTagExcludeQuarterPlusOne);
    }
    p.exclusions.push_back(full - 1);
    p.tags.push_back(kTagExcludeCompleteMinusOne);
  } else if (n % 2 == 1 && n >= 11) {
    p.status = PredictionStatus::complete;
    p.m_lo = (static_cast<long long>(n) * n + 2LL * n - 3) / 4;
    p.m_hi = full;
    p.tags = {kTagMemberRangeOdd, kTagBoundOddQuarter};
  } else {
    p.status = PredictionStatus::requires_search;
    p.tags = {kTagNotCovered};
  }
  return p;
}

}  // namespace mec
