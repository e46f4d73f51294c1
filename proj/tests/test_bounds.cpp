#include <catch2/catch_amalgamated.hpp>

#include "mec/bounds.hpp"
#include "mec/graph.hpp"
#include "mec/rational.hpp"

using namespace mec;

namespace {

Graph labeled_graph(int n, unsigned mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("rational arithmetic", "[rational]") {
  REQUIRE(Rational(6, 8) == Rational(3, 4));
  REQUIRE(Rational(3, -4) == Rational(-3, 4));
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  REQUIRE(Rational(1, 2) - Rational(1, 2) == Rational(0));
  REQUIRE(Rational(7, 2) / Rational(7) == Rational(1, 2));
  REQUIRE(Rational(1, 3) < Rational(1, 2));
  REQUIRE(Rational(99, 4).str() == "99/4");
  REQUIRE(Rational(36).str() == "36");
  REQUIRE(!Rational(99, 4).is_integer());
  REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);

  REQUIRE(exact_isqrt(0) == 0);
  REQUIRE(exact_isqrt(144) == 12);
  REQUIRE(exact_isqrt(145) == -1);
  REQUIRE(exact_isqrt((1LL << 40) + 1) == -1);
  REQUIRE(exact_isqrt(1LL << 40) == 1LL << 20);
}

TEST_CASE("lower bound formula", "[bounds]") {
  REQUIRE(mec_lower_bound(12).value == 36);
  REQUIRE(mec_lower_bound(12).tag == kTagBoundEvenQuarter);
  REQUIRE(mec_lower_bound(9).value == 24);
  REQUIRE(mec_lower_bound(9).tag == kTagBoundOddQuarter);
  REQUIRE(mec_lower_bound(4).value == 4);
  REQUIRE(mec_lower_bound(10).value == 25);
  REQUIRE(mec_lower_bound(8).value == 16);
  REQUIRE(mec_lower_bound(6).value == 9);
  // Odd orders below 9 and anything below 4 fall outside the published
  // ranges: trivial bound, explicit tag.
  for (int n : {1, 2, 3, 5, 7}) {
    REQUIRE(mec_lower_bound(n).value == 0);
    REQUIRE(mec_lower_bound(n).tag == kTagNotCovered);
  }
}

TEST_CASE("degree-sum quadratic roots are exact", "[bounds]") {
  REQUIRE(degree_sum_quadratic_root(12, Parity::even) == Rational(36));
  REQUIRE(degree_sum_quadratic_root(9, Parity::odd) == Rational(99, 4));
  REQUIRE(degree_sum_quadratic_root(4, Parity::even) == Rational(4));

  for (int n = 4; n <= 100; n += 2)
    REQUIRE(degree_sum_quadratic_root(n, Parity::even) ==
            Rational(static_cast<long long>(n) * n, 4));
  for (int n = 5; n <= 99; n += 2)
    REQUIRE(degree_sum_quadratic_root(n, Parity::odd) ==
            Rational(static_cast<long long>(n) * (n + 2), 4));

  // The returned value really is a root: plugging it back into the
  // quadratic gives exactly zero, in rational arithmetic.
  for (int n = 4; n <= 40; ++n) {
    long long nn = n;
    Rational me = degree_sum_quadratic_root(n, Parity::even);
    REQUIRE(Rational(8) * me * me + Rational(2 * nn * (2 - 3 * nn)) * me +
                Rational(nn * nn * nn * (nn - 1)) ==
            Rational(0));
    Rational mo = degree_sum_quadratic_root(n, Parity::odd);
    REQUIRE(Rational(8) * mo * mo - Rational(6 * nn * nn) * mo +
                Rational(nn * nn * (nn * nn + nn - 2)) ==
            Rational(0));
  }

  // The odd-order published bound is weaker than the exact odd root, and
  // coincides with the even root at even orders.
  for (int n = 9; n <= 49; n += 2)
    REQUIRE(Rational(mec_lower_bound(n).value) <
            degree_sum_quadratic_root(n, Parity::odd));
}

TEST_CASE("non-edge degree-sum predicate", "[bounds]") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  REQUIRE(nonedge_degree_sum_at_least(Graph::complete(7), 100));
  REQUIRE(!nonedge_degree_sum_at_least(Graph(4), 4));
  REQUIRE(nonedge_degree_sum_at_least(c4, 4));
  REQUIRE(!nonedge_degree_sum_at_least(c4, 5));

  REQUIRE(degree_sum_filter(c4, 3));
  Graph k4_minus = Graph::complete(4);
  k4_minus.remove_edge(0, 1);
  REQUIRE(degree_sum_filter(k4_minus, 3));
  Graph star6 = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  REQUIRE(!degree_sum_filter(star6, 5));
}

TEST_CASE("independent-triple predicate", "[bounds]") {
  // C_5 has no independent triple at all, so the filter passes vacuously.
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  REQUIRE(independent_triple_filter(c5, 5));
  REQUIRE(independent_triple_filter(c5, 1000));

  REQUIRE(!independent_triple_filter(Graph(5), 5));

  // C_6: three alternating vertices are independent with degree sum 6 < 10.
  Graph c6 = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  REQUIRE(!independent_triple_filter(c6, 5));
  REQUIRE(independent_triple_filter(c6, 3));
}

TEST_CASE("predicted spectrum", "[bounds]") {
  SpectrumPrediction p12 = predicted_spectrum(12);
  REQUIRE(p12.covered());
  REQUIRE(p12.m_lo == 36);
  REQUIRE(p12.m_hi == 66);
  REQUIRE(p12.exclusions == std::vector<long long>{65});
  REQUIRE(p12.contains(36));
  REQUIRE(!p12.contains(35));
  REQUIRE(!p12.contains(65));
  REQUIRE(p12.contains(66));
  REQUIRE(p12.contains(37));  // 12 % 4 == 0: no quarter-plus-one exclusion

  SpectrumPrediction p14 = predicted_spectrum(14);
  REQUIRE(p14.covered());
  REQUIRE(p14.m_lo == 49);
  REQUIRE(p14.m_hi == 91);
  REQUIRE(p14.exclusions == std::vector<long long>{50, 90});

  SpectrumPrediction p11 = predicted_spectrum(11);
  REQUIRE(p11.covered());
  REQUIRE(p11.m_lo == 35);
  REQUIRE(p11.m_hi == 55);
  REQUIRE(p11.exclusions.empty());
  REQUIRE(p11.contains(54));

  for (int n : {3, 4, 5, 6, 7, 8, 9, 10}) {
    SpectrumPrediction p = predicted_spectrum(n);
    REQUIRE(p.status == PredictionStatus::requires_search);
    REQUIRE(p.tags == std::vector<std::string>{kTagNotCovered});
  }
  REQUIRE_THROWS_AS(predicted_spectrum(2), std::invalid_argument);

  for (int n = 11; n <= 40; ++n) {
    SpectrumPrediction p = predicted_spectrum(n);
    REQUIRE(p.covered());
    REQUIRE(p.m_lo == mec_lower_bound(n).value);
    REQUIRE(p.m_hi == static_cast<long long>(n) * (n - 1) / 2);
    for (long long x : p.exclusions) {
      REQUIRE(x >= p.m_lo);
      REQUIRE(x <= p.m_hi);
    }
  }
}

TEST_CASE("degree-sum hypotheses bound the size on small graphs",
          "[bounds][slow]") {
  // Brute force over every labeled graph up to 6 vertices: if all non-edges
  // have degree sum >= n (even) or >= n+2 (odd), the edge count respects
  // the matching closed-form bound. Also the mean-inequality step
  // sum d^2 >= 4m^2/n, which holds unconditionally.
  for (int n = 4; n <= 6; ++n) {
    unsigned total = 1u << (n * (n - 1) / 2);
    for (unsigned mask = 0; mask < total; ++mask) {
      Graph g = labeled_graph(n, mask);
      long long m = g.size();
      long long sum_d2 = 0;
      for (int v = 0; v < n; ++v)
        sum_d2 += static_cast<long long>(g.degree(v)) * g.degree(v);
      REQUIRE(Rational(sum_d2) >= Rational(4 * m * m, n));
      if (n % 2 == 0 && nonedge_degree_sum_at_least(g, n))
        REQUIRE(Rational(m) >= Rational(static_cast<long long>(n) * n, 4));
      if (n % 2 == 1 && nonedge_degree_sum_at_least(g, n + 2))
        REQUIRE(m >= (static_cast<long long>(n) * n + 2 * n - 3) / 4);
    }
  }
}
