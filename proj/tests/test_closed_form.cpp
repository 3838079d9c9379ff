#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slgraph/closed_form.hpp"
#include "slgraph/graph.hpp"
#include "slgraph/spectral.hpp"

using namespace slgraph;

namespace {

// Numeric oracle: eigensolve the explicitly constructed loop graph with
// loops placed left part first (or anywhere for complete graphs).
Spectrum numeric_complete(int order, int loops) {
  std::vector<int> s(loops);
  for (int v = 0; v < loops; ++v) s[v] = v;
  return spectrum(with_loops(complete_graph(order), std::move(s)));
}

Spectrum numeric_bipartite(int m, int n, int loops) {
  std::vector<int> s(loops);
  for (int v = 0; v < loops; ++v) s[v] = v;
  return spectrum(with_loops(complete_bipartite_graph(m, n), std::move(s)));
}

double max_pair_diff(const Spectrum& a, const Spectrum& b) {
  REQUIRE(a.pairs.size() == b.pairs.size());
  double diff = 0.0;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    REQUIRE(a.pairs[i].second == b.pairs[i].second);
    diff = std::max(diff, std::abs(a.pairs[i].first - b.pairs[i].first));
  }
  return diff;
}

}  // namespace

TEST_CASE("complete graph spectra") {
  Spectrum no_loops = complete_spectrum(5, 0);
  REQUIRE(no_loops.pairs.size() == 2);
  CHECK(no_loops.pairs[0] == std::pair{4.0, 1});
  CHECK(no_loops.pairs[1] == std::pair{-1.0, 4});

  Spectrum all_loops = complete_spectrum(3, 3);
  REQUIRE(all_loops.pairs.size() == 2);
  CHECK(all_loops.pairs[0] == std::pair{3.0, 1});
  CHECK(all_loops.pairs[1] == std::pair{0.0, 2});

  // partial loops: (3 +- sqrt(17))/2 alongside 0 and -1
  Spectrum partial = complete_spectrum(4, 2);
  REQUIRE(partial.pairs.size() == 4);
  CHECK(partial.pairs[0].first == doctest::Approx(3.5615528128088303).epsilon(1e-12));
  CHECK(partial.pairs[1].first == doctest::Approx(0.0));
  CHECK(partial.pairs[2].first == doctest::Approx(-0.5615528128088303).epsilon(1e-12));
  CHECK(partial.pairs[3].first == doctest::Approx(-1.0));
  CHECK(max_pair_diff(partial, numeric_complete(4, 2)) < 1e-8);

  // order 1 degenerates gracefully
  CHECK(complete_spectrum(1, 0).pairs == std::vector{std::pair{0.0, 1}});
  CHECK(complete_spectrum(1, 1).pairs == std::vector{std::pair{1.0, 1}});

  CHECK_THROWS_AS(complete_spectrum(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(complete_spectrum(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(complete_spectrum(0, 0), std::invalid_argument);
}

TEST_CASE("complete bipartite spectra") {
  Spectrum no_loops = complete_bipartite_spectrum(3, 3, 0);
  REQUIRE(no_loops.pairs.size() == 3);
  CHECK(no_loops.pairs[0] == std::pair{3.0, 1});
  CHECK(no_loops.pairs[1] == std::pair{0.0, 4});
  CHECK(no_loops.pairs[2] == std::pair{-3.0, 1});

  // loops exactly filling the left part: (1 +- sqrt(37))/2, 1, 0
  Spectrum left_full = complete_bipartite_spectrum(3, 3, 3);
  REQUIRE(left_full.pairs.size() == 4);
  CHECK(left_full.pairs[0].first ==
        doctest::Approx(3.5413812651491097).epsilon(1e-12));
  CHECK(left_full.pairs[1] == std::pair{1.0, 2});
  CHECK(left_full.pairs[2] == std::pair{0.0, 2});
  CHECK(left_full.pairs[3].first ==
        doctest::Approx(-2.5413812651491097).epsilon(1e-12));

  // partially looped left part; the 1-eigenvalue drops out at one loop
  Spectrum partial = complete_bipartite_spectrum(2, 2, 1);
  REQUIRE(partial.pairs.size() == 4);
  CHECK(partial.pairs[0].first == doctest::Approx(2.342923082777170).epsilon(1e-10));
  CHECK(partial.pairs[1].first == doctest::Approx(0.470683419871161).epsilon(1e-10));
  CHECK(partial.pairs[2].first == doctest::Approx(0.0));
  CHECK(partial.pairs[3].first == doctest::Approx(-1.813606502648331).epsilon(1e-10));
  CHECK(max_pair_diff(partial, numeric_bipartite(2, 2, 1)) < 1e-8);

  // fully looped graph is a unit shift of the loopless one
  Spectrum full = complete_bipartite_spectrum(2, 3, 5);
  REQUIRE(full.pairs.size() == 3);
  CHECK(full.pairs[0].first == doctest::Approx(1.0 + std::sqrt(6.0)).epsilon(1e-12));
  CHECK(full.pairs[1] == std::pair{1.0, 3});
  CHECK(full.pairs[2].first == doctest::Approx(1.0 - std::sqrt(6.0)).epsilon(1e-12));

  // equal-value collisions merge: both parts of size 1
  CHECK(complete_bipartite_spectrum(1, 1, 0).pairs ==
        std::vector{std::pair{1.0, 1}, std::pair{-1.0, 1}});
  CHECK(complete_bipartite_spectrum(1, 1, 2).pairs ==
        std::vector{std::pair{2.0, 1}, std::pair{0.0, 1}});

  CHECK_THROWS_AS(complete_bipartite_spectrum(0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite_spectrum(2, 2, 5), std::invalid_argument);
}

TEST_CASE("bracketed cubic solving") {
  // all loops inside the left part of a 3,3 bipartite graph
  CubicCoefficients cubic = left_part_loops_cubic(3, 3, 2);
  CHECK(cubic.a == doctest::Approx(-1.0));
  CHECK(cubic.b == doctest::Approx(-9.0));
  CHECK(cubic.c == doctest::Approx(3.0));
  CHECK(cubic.discriminant() > 0.0);

  auto roots = solve_bracketed_cubic(cubic, left_part_loops_brackets(3, 3, 2));
  // frozen from the eigensolver on the 3,3 graph with two left loops
  CHECK(roots[0] == doctest::Approx(3.392344345629622).epsilon(1e-11));
  CHECK(roots[1] == doctest::Approx(0.325396771834382).epsilon(1e-11));
  CHECK(roots[2] == doctest::Approx(-2.717741117464004).epsilon(1e-11));
  for (double r : roots) CHECK(std::abs(cubic.eval(r)) < 1e-10);

  auto oracle = numeric_bipartite(3, 3, 2);
  Spectrum closed = complete_bipartite_spectrum(3, 3, 2);
  CHECK(max_pair_diff(closed, oracle) < 1e-8);

  // a double root cannot be bracketed by sign changes
  CubicCoefficients degenerate{-1.0, 0.0, 0.0};  // x^2 (x - 1)
  std::array<Interval, 3> around{Interval{-0.1, 0.1}, Interval{-0.05, 0.05},
                                 Interval{0.9, 1.1}};
  CHECK_THROWS_AS(solve_bracketed_cubic(degenerate, around), std::domain_error);
}

TEST_CASE("two-part cubic brackets") {
  auto brackets = two_part_loops_brackets(3, 3, 4);
  CHECK(brackets[0].hi == 0.0);
  CHECK(brackets[1].lo == 0.0);
  CHECK(brackets[1].hi == 1.0);
  CHECK(brackets[2].lo == 1.0);

  CubicCoefficients p = two_part_loops_cubic(3, 3, 4);
  CHECK(p.eval(0.0) == doctest::Approx(6.0));
  CHECK(p.eval(1.0) == doctest::Approx(-3.0));

  CubicCoefficients q = two_part_loops_cubic(2, 3, 4);
  CHECK(q.eval(0.0) == doctest::Approx(2.0));
  CHECK(q.eval(1.0) == doctest::Approx(-4.0));

  CHECK_THROWS_AS(two_part_loops_brackets(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(left_part_loops_cubic(3, 3, 3), std::invalid_argument);

  // spilled loops: roots match the eigensolver of the 3,3 graph with four loops
  auto roots = solve_bracketed_cubic(two_part_loops_cubic(3, 3, 4),
                                     two_part_loops_brackets(3, 3, 4));
  auto oracle = numeric_bipartite(3, 3, 4);
  Spectrum closed = complete_bipartite_spectrum(3, 3, 4);
  CHECK(max_pair_diff(closed, oracle) < 1e-9);
  CHECK(roots[0] == doctest::Approx(oracle.pairs.front().first).epsilon(1e-10));
}

TEST_CASE("closed forms match the numeric spectra on a small sweep") {
  for (int n = 1; n <= 8; ++n) {
    for (int s = 0; s <= n; ++s) {
      CHECK(max_pair_diff(complete_spectrum(n, s), numeric_complete(n, s)) < 1e-8);
    }
  }
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (int s = 0; s <= m + n; ++s) {
        CHECK(max_pair_diff(complete_bipartite_spectrum(m, n, s),
                            numeric_bipartite(m, n, s)) < 1e-8);
      }
    }
  }
}

TEST_CASE("closed-form spectra satisfy the walk-count identities") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int s = 0; s <= m + n; ++s) {
        Spectrum spec = complete_bipartite_spectrum(m, n, s);
        double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
        for (const auto& [value, mult] : spec.pairs) {
          sum1 += mult * value;
          sum2 += mult * value * value;
          sum3 += mult * value * value * value;
        }
        const int left = std::min(s, m);
        const int right = s - left;
        CHECK(std::abs(sum1 - s) < 1e-9);
        CHECK(std::abs(sum2 - (2.0 * m * n + s)) < 1e-9);
        CHECK(std::abs(sum3 - (3.0 * (m * right + n * left) + s)) < 1e-8);
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int s = 0; s <= n; ++s) {
      Spectrum spec = complete_spectrum(n, s);
      double sum1 = 0.0, sum2 = 0.0;
      for (const auto& [value, mult] : spec.pairs) {
        sum1 += mult * value;
        sum2 += mult * value * value;
      }
      CHECK(std::abs(sum1 - s) < 1e-9);
      CHECK(std::abs(sum2 - (static_cast<double>(n) * (n - 1) + s)) < 1e-9);
    }
  }
}

TEST_CASE("cubic roots avoid the 0 and 1 eigenvalues") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      for (int s = 1; s < m; ++s) {
        auto roots = solve_bracketed_cubic(left_part_loops_cubic(m, n, s),
                                           left_part_loops_brackets(m, n, s));
        CHECK(roots[0] > 1.0);
        CHECK(roots[1] > 0.0);
        CHECK(roots[1] < 1.0);
        CHECK(roots[2] < 0.0);
      }
      for (int s = m + 1; s < m + n; ++s) {
        auto roots = solve_bracketed_cubic(two_part_loops_cubic(m, n, s),
                                           two_part_loops_brackets(m, n, s));
        CHECK(roots[0] > 1.0);
        CHECK(roots[1] > 0.0);
        CHECK(roots[1] < 1.0);
        CHECK(roots[2] < 0.0);
      }
    }
  }
}
