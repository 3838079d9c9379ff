#pragma once

#include <optional>
#include <vector>

#include "slgraph/graph.hpp"

namespace slgraph {

// Tolerance for "bound attained" flags.
inline constexpr double kEqualityTol = 1e-8;

// Energy of a loop graph: sum of |lambda_i - loops/order| over the
// adjacency eigenvalues. Reduces to sum |lambda_i| without loops.
double energy(const LoopGraph& lg);
double energy(const Graph& g);

// Same sum evaluated on an already-computed eigenvalue list.
double energy_from_eigenvalues(const std::vector<double>& values, int order,
                               int loop_count);

// sqrt(order * (2*size + loops - loops^2/order)), an upper bound for the
// energy of any loop graph with these counts.
double energy_upper_bound(int order, int size, int loop_count);

// The (a, b) degree pair forced on loop/non-loop vertices when the energy
// bound is attained. `integral` flags whether both are non-negative
// integers at most order-1, a necessary condition for a graph to exist.
struct EqualityDegrees {
  double a = 0.0;
  double b = 0.0;
  bool integral = false;
};
EqualityDegrees equality_degrees(int order, int size, int loop_count);

// lower = (2*size + loops)/order (Rayleigh quotient at the all-ones
// vector), upper = max base degree + 1. The lower bound's sharpness
// statement assumes a connected base graph, so connectivity is reported.
struct Lambda1Bounds {
  double lower = 0.0;
  double upper = 0.0;
  bool base_connected = false;
};
Lambda1Bounds lambda1_bounds(const LoopGraph& lg);

struct EnergyReport {
  int order = 0;
  int size = 0;
  int loop_count = 0;
  double energy = 0.0;
  double loop_ratio = 0.0;  // loops/order
  double upper_bound = 0.0;
  double lambda1 = 0.0;
  double lambda1_lower = 0.0;
  double lambda1_upper = 0.0;
  bool upper_bound_attained = false;
  bool lambda1_lower_attained = false;
  bool lambda1_upper_attained = false;
  bool base_connected = false;
};
EnergyReport energy_report(const LoopGraph& lg);

// Searches the labeled graphs of the given order for a connected graph in
// which loop vertices would have degree k and the rest degree k+1 (loops
// are then attached exactly to the degree-k vertices, making the all-ones
// vector an eigenvector for k+1). Returns the first match in enumeration
// order, or nothing.
std::optional<LoopGraph> make_semiregular_equality_instance(int k, int order);

}  // namespace slgraph
