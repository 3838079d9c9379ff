#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slgraph/graph.hpp"

namespace slgraph {

// Two eigenvalues closer than this are treated as one multiple eigenvalue.
inline constexpr double kClusterTol = 1e-7;

// Dense symmetric matrix; set() mirrors across the diagonal.
class SymMatrix {
 public:
  explicit SymMatrix(int order);
  // Row-major entries; the upper triangle is authoritative and is mirrored
  // onto the lower one.
  SymMatrix(int order, std::vector<double> entries);

  int order() const { return order_; }
  double at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, double value) {
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
  }
  const std::vector<double>& data() const { return entries_; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * order_ + j;
  }
  int order_;
  std::vector<double> entries_;
};

// Adjacency matrix of a loop graph: (i,j)=1 iff {i,j} is an edge,
// (i,i)=1 iff i carries a loop.
SymMatrix adjacency(const LoopGraph& lg);
SymMatrix adjacency(const Graph& g, std::uint64_t loop_mask);

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double off_norm)
      : std::runtime_error(what), residual(off_norm) {}
  double residual;
};

// All eigenvalues with algebraic multiplicity, sorted descending.
// Cyclic Jacobi; converges when the off-diagonal Frobenius norm drops
// below 1e-12 times the initial Frobenius norm (at most 100 sweeps).
std::vector<double> eigenvalues(const SymMatrix& a);

// Eigenvalue list with equal values merged into (value, multiplicity)
// pairs, strictly descending.
struct Spectrum {
  std::vector<std::pair<double, int>> pairs;

  int order() const;
  std::vector<double> values() const;  // expanded with multiplicity, descending
};

// Greedy gap clustering: sorted values are split where consecutive entries
// differ by more than tol; each cluster is reported as its mean.
Spectrum cluster_values(std::vector<double> values, double tol = kClusterTol);
// Same merging for pre-weighted pairs (multiplicity-weighted means);
// entries with multiplicity <= 0 are dropped first.
Spectrum merge_spectrum_pairs(std::vector<std::pair<double, int>> pairs,
                              double tol = kClusterTol);

Spectrum spectrum(const LoopGraph& lg);

// Traces of A^k for k = 1..kmax (kmax <= 4), in exact integer arithmetic.
// trace(A^k) counts the closed walks of length k, loops included.
std::vector<std::int64_t> power_traces(const LoopGraph& lg, int kmax);

namespace detail {

struct Eigensystem {
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // row-major; column j pairs with values[j]
  int order = 0;
};

Eigensystem jacobi_eigensystem(const SymMatrix& a, bool want_vectors);

}  // namespace detail

}  // namespace slgraph
