#include "slgraph/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slgraph/spectral.hpp"

namespace slgraph {

double energy_from_eigenvalues(const std::vector<double>& values, int order,
                               int loop_count) {
  const double shift = static_cast<double>(loop_count) / order;
  double sum = 0.0;
  for (double v : values) sum += std::abs(v - shift);
  return sum;
}

double energy(const LoopGraph& lg) {
  return energy_from_eigenvalues(eigenvalues(adjacency(lg)), lg.order(),
                                 lg.loop_count());
}

double energy(const Graph& g) { return energy(LoopGraph(g, {})); }

double energy_upper_bound(int order, int size, int loop_count) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (size < 0 || loop_count < 0 || loop_count > order) {
    throw std::invalid_argument("invalid size or loop count");
  }
  const double n = order, s = loop_count;
  return std::sqrt(n * (2.0 * size + s - s * s / n));
}

EqualityDegrees equality_degrees(int order, int size, int loop_count) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const double n = order, m = size, s = loop_count;
  EqualityDegrees d;
  d.a = 2.0 * m / n + 3.0 * s / n - 2.0 * s * s / (n * n) - 1.0;
  d.b = 2.0 * m / n + s / n - 2.0 * s * s / (n * n);
  auto near_integer = [](double x) {
    return std::abs(x - std::round(x)) <= 1e-9;
  };
  d.integral = near_integer(d.a) && near_integer(d.b) && d.a >= -1e-9 &&
               d.b >= -1e-9 && d.a <= order - 1 + 1e-9 && d.b <= order - 1 + 1e-9;
  return d;
}

Lambda1Bounds lambda1_bounds(const LoopGraph& lg) {
  Lambda1Bounds bounds;
  bounds.lower = (2.0 * lg.size() + lg.loop_count()) / lg.order();
  bounds.upper = lg.base().max_degree() + 1.0;
  bounds.base_connected = is_connected(lg.base());
  return bounds;
}

EnergyReport energy_report(const LoopGraph& lg) {
  EnergyReport report;
  report.order = lg.order();
  report.size = lg.size();
  report.loop_count = lg.loop_count();
  report.loop_ratio = static_cast<double>(lg.loop_count()) / lg.order();

  const auto values = eigenvalues(adjacency(lg));
  report.energy = energy_from_eigenvalues(values, lg.order(), lg.loop_count());
  report.lambda1 = values.front();
  report.upper_bound = energy_upper_bound(lg.order(), lg.size(), lg.loop_count());

  const auto bounds = lambda1_bounds(lg);
  report.lambda1_lower = bounds.lower;
  report.lambda1_upper = bounds.upper;
  report.base_connected = bounds.base_connected;

  report.upper_bound_attained =
      std::abs(report.energy - report.upper_bound) <= kEqualityTol;
  report.lambda1_lower_attained =
      std::abs(report.lambda1 - report.lambda1_lower) <= kEqualityTol;
  report.lambda1_upper_attained =
      std::abs(report.lambda1 - report.lambda1_upper) <= kEqualityTol;
  return report;
}

std::optional<LoopGraph> make_semiregular_equality_instance(int k, int order) {
  if (k < 1) throw std::invalid_argument("degree k must be >= 1");
  if (order < k + 2) {
    throw std::invalid_argument("order must be at least k + 2");
  }
  if (order > kMaxEnumerationOrder) {
    throw std::invalid_argument("search is limited to order <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  LabeledGraphStream stream(order);
  while (auto g = stream.next()) {
    const auto degs = g->degrees();
    bool ok = std::all_of(degs.begin(), degs.end(),
                          [&](int d) { return d == k || d == k + 1; });
    if (!ok || !is_connected(*g)) continue;
    std::vector<int> loops;
    for (int v = 0; v < order; ++v)
      if (degs[v] == k) loops.push_back(v);
    return LoopGraph(std::move(*g), std::move(loops));
  }
  return std::nullopt;
}

}  // namespace slgraph
