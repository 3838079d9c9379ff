#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "slgraph/energy.hpp"
#include "slgraph/graph.hpp"
#include "slgraph/spectral.hpp"

using namespace slgraph;

namespace {

LoopGraph k33_with(int loops) {
  std::vector<int> s(loops);
  for (int v = 0; v < loops; ++v) s[v] = v;
  return with_loops(complete_bipartite_graph(3, 3), std::move(s));
}

}  // namespace

TEST_CASE("loop energy") {
  CHECK(energy(k33_with(3)) == doctest::Approx(8.082762530298220).epsilon(1e-10));
  CHECK(energy(k33_with(0)) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(energy(k33_with(1)) == doctest::Approx(7.068965286707623).epsilon(1e-10));
  CHECK(energy(k33_with(2)) == doctest::Approx(7.451355357925911).epsilon(1e-10));

  // looped empty graphs: eigenvalues are 1 (loops times) and 0
  for (int n = 1; n <= 6; ++n) {
    for (int s = 0; s <= n; ++s) {
      std::vector<int> loops(s);
      for (int v = 0; v < s; ++v) loops[v] = v;
      double expected = 2.0 * s * (n - s) / n;
      CHECK(energy(with_loops(empty_graph(n), loops)) ==
            doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("ordinary energy") {
  CHECK(energy(complete_bipartite_graph(3, 3)) == doctest::Approx(6.0));
  CHECK(energy(complete_graph(2)) == doctest::Approx(2.0));
  CHECK(energy(empty_graph(4)) == doctest::Approx(0.0));
}

TEST_CASE("energy upper bound") {
  CHECK(energy_upper_bound(6, 9, 3) ==
        doctest::Approx(10.816653826391969).epsilon(1e-12));
  CHECK(energy_upper_bound(6, 9, 3) >= energy(k33_with(3)));
  CHECK(energy_upper_bound(5, 0, 0) == doctest::Approx(0.0));
  CHECK(energy_upper_bound(4, 6, 4) ==
        doctest::Approx(6.928203230275509).epsilon(1e-12));
  CHECK_THROWS_AS(energy_upper_bound(4, 6, 5), std::invalid_argument);
  CHECK_THROWS_AS(energy_upper_bound(0, 0, 0), std::invalid_argument);
}

TEST_CASE("equality degrees") {
  // n=4, m=4, s=2: a = 2 + 1.5 - 0.5 - 1, b = 2 + 0.5 - 0.5
  auto d = equality_degrees(4, 4, 2);
  CHECK(d.a == doctest::Approx(2.0));
  CHECK(d.b == doctest::Approx(2.0));
  CHECK(d.integral);

  // fractional pair: no graph can attain the bound here
  auto frac = equality_degrees(4, 3, 2);
  CHECK(frac.a == doctest::Approx(1.5));
  CHECK_FALSE(frac.integral);

  // no loops: the pair collapses onto the average degree
  auto plain = equality_degrees(5, 5, 0);
  CHECK(plain.a == doctest::Approx(2.0 * 5 / 5 - 1.0));
  CHECK(plain.b == doctest::Approx(2.0 * 5 / 5));

  // defining identity a + (1 - s/n)^2 = b + (s/n)^2
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      for (int s = 0; s <= n; ++s) {
        auto eq = equality_degrees(n, m, s);
        double ratio = static_cast<double>(s) / n;
        CHECK(eq.a + (1.0 - ratio) * (1.0 - ratio) ==
              doctest::Approx(eq.b + ratio * ratio).epsilon(1e-12));
      }
    }
  }

  auto k2_loop = equality_degrees(2, 1, 1);
  CHECK(k2_loop.a == doctest::Approx(1.0));
  CHECK(k2_loop.b == doctest::Approx(1.0));
  CHECK(k2_loop.integral);
}

TEST_CASE("lambda1 bounds") {
  // fully looped complete graph attains the upper bound
  for (int n = 2; n <= 6; ++n) {
    auto lg = with_all_loops(complete_graph(n));
    auto bounds = lambda1_bounds(lg);
    CHECK(bounds.upper == doctest::Approx(static_cast<double>(n)));
    auto vals = eigenvalues(adjacency(lg));
    CHECK(vals.front() == doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
  }

  auto p3 = with_loops(path_graph(3), {});
  auto bounds = lambda1_bounds(p3);
  CHECK(bounds.lower == doctest::Approx(4.0 / 3.0));
  CHECK(bounds.upper == doctest::Approx(3.0));
  CHECK(bounds.base_connected);
  double lambda1 = eigenvalues(adjacency(p3)).front();
  CHECK(lambda1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(bounds.lower <= lambda1);
  CHECK(lambda1 <= bounds.upper);

  CHECK_FALSE(lambda1_bounds(with_loops(empty_graph(3), {0})).base_connected);

  // loops on the lower-degree class make the all-ones vector extremal
  auto instance = with_loops(path_graph(3), {0, 2});
  double l1 = eigenvalues(adjacency(instance)).front();
  CHECK(l1 == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(lambda1_bounds(instance).lower == doctest::Approx(2.0));
}

TEST_CASE("energy report flags") {
  // the fully looped single edge attains its energy bound
  auto report = energy_report(with_all_loops(complete_graph(2)));
  CHECK(report.energy == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(report.upper_bound == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(report.upper_bound_attained);
  CHECK(report.lambda1_upper_attained);
  CHECK(report.base_connected);

  auto loose = energy_report(k33_with(3));
  CHECK_FALSE(loose.upper_bound_attained);
  CHECK(loose.lambda1 == doctest::Approx(3.541381265149110).epsilon(1e-10));
  CHECK(loose.lambda1_lower == doctest::Approx(3.5));
  CHECK(loose.lambda1_upper == doctest::Approx(4.0));
  CHECK(loose.loop_ratio == doctest::Approx(0.5));
}

TEST_CASE("bounds hold on random loop graphs") {
  std::mt19937 rng(550123);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    std::vector<int> loops;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) loops.push_back(v);
    LoopGraph lg(Graph(n, edges), loops);

    auto report = energy_report(lg);
    CHECK(report.energy <= report.upper_bound + 1e-8);
    CHECK(report.lambda1 >= report.lambda1_lower - 1e-8);
    CHECK(report.lambda1 <= report.lambda1_upper + 1e-8);
  }
}

TEST_CASE("energy is invariant under relabeling") {
  std::mt19937 rng(88);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    std::vector<int> loops;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) loops.push_back(v);

    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<Edge> mapped_edges;
    for (const auto& [u, v] : edges) mapped_edges.emplace_back(perm[u], perm[v]);
    std::vector<int> mapped_loops;
    for (int v : loops) mapped_loops.push_back(perm[v]);

    double original = energy(LoopGraph(Graph(n, edges), loops));
    double relabeled = energy(LoopGraph(Graph(n, mapped_edges), mapped_loops));
    CHECK(original == doctest::Approx(relabeled).epsilon(1e-9));
  }
}

TEST_CASE("semi-regular equality instances") {
  auto small = make_semiregular_equality_instance(1, 3);
  REQUIRE(small.has_value());
  CHECK(is_connected(small->base()));
  CHECK(is_semiregular(*small, 1, 2).loop_degree_pattern);
  double l1 = eigenvalues(adjacency(*small)).front();
  CHECK(l1 == doctest::Approx(lambda1_bounds(*small).lower).epsilon(1e-10));

  auto mid = make_semiregular_equality_instance(2, 4);
  REQUIRE(mid.has_value());
  CHECK(is_semiregular(*mid, 2, 3).loop_degree_pattern);
  CHECK(eigenvalues(adjacency(*mid)).front() ==
        doctest::Approx(lambda1_bounds(*mid).lower).epsilon(1e-10));

  auto regular = make_semiregular_equality_instance(3, 5);
  REQUIRE(regular.has_value());
  CHECK(eigenvalues(adjacency(*regular)).front() ==
        doctest::Approx(lambda1_bounds(*regular).lower).epsilon(1e-10));

  CHECK_THROWS_AS(make_semiregular_equality_instance(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_semiregular_equality_instance(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_semiregular_equality_instance(1, 8), std::invalid_argument);
}
