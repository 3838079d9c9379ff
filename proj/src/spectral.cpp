#include "slgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slgraph {

namespace {

constexpr double kJacobiRelTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

double frobenius_norm(const std::vector<double>& a) {
  double sum = 0.0;
  for (double x : a) sum += x * x;
  return std::sqrt(sum);
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double x = a[static_cast<std::size_t>(i) * n + j];
      sum += 2.0 * x * x;
    }
  return std::sqrt(sum);
}

}  // namespace

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
  entries_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix::SymMatrix(int order, std::vector<double> entries) : order_(order) {
  if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
  if (entries.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("entry count does not match matrix order");
  }
  entries_ = std::move(entries);
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      entries_[index(j, i)] = entries_[index(i, j)];
}

SymMatrix adjacency(const LoopGraph& lg) {
  return adjacency(lg.base(), lg.loop_mask());
}

SymMatrix adjacency(const Graph& g, std::uint64_t loop_mask) {
  SymMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
  for (int v = 0; v < g.order() && v < 64; ++v) {
    if (loop_mask >> v & 1) a.set(v, v, 1.0);
  }
  return a;
}

namespace detail {

Eigensystem jacobi_eigensystem(const SymMatrix& input, bool want_vectors) {
  const int n = input.order();
  std::vector<double> a = input.data();
  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double threshold = kJacobiRelTol * frobenius_norm(a);
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > threshold) {
    if (sweep++ >= kJacobiMaxSweeps) {
      throw ConvergenceError("eigensolver did not converge after " +
                                 std::to_string(kJacobiMaxSweeps) +
                                 " sweeps; off-diagonal residual " +
                                 std::to_string(off),
                             off);
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;  // avoid overflow in theta*theta
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = at(k, p);
          double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            double vkp = v[static_cast<std::size_t>(k) * n + p];
            double vkq = v[static_cast<std::size_t>(k) * n + q];
            v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
            v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  Eigensystem result;
  result.order = n;
  result.values.resize(n);
  for (int i = 0; i < n; ++i) result.values[i] = at(i, i);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return result.values[x] > result.values[y];
  });
  std::vector<double> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = result.values[perm[i]];
  result.values = std::move(sorted);
  if (want_vectors) {
    result.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        result.vectors[static_cast<std::size_t>(i) * n + j] =
            v[static_cast<std::size_t>(i) * n + perm[j]];
  }
  return result;
}

}  // namespace detail

std::vector<double> eigenvalues(const SymMatrix& a) {
  return detail::jacobi_eigensystem(a, false).values;
}

int Spectrum::order() const {
  int total = 0;
  for (const auto& [value, mult] : pairs) total += mult;
  return total;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(order());
  for (const auto& [value, mult] : pairs)
    for (int k = 0; k < mult; ++k) out.push_back(value);
  return out;
}

Spectrum merge_spectrum_pairs(std::vector<std::pair<double, int>> pairs,
                              double tol) {
  std::erase_if(pairs, [](const auto& p) { return p.second <= 0; });
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  Spectrum spec;
  for (const auto& [value, mult] : pairs) {
    if (!spec.pairs.empty() && spec.pairs.back().first - value <= tol) {
      auto& [cur, cur_mult] = spec.pairs.back();
      cur = (cur * cur_mult + value * mult) / (cur_mult + mult);
      cur_mult += mult;
    } else {
      spec.pairs.emplace_back(value, mult);
    }
  }
  return spec;
}

Spectrum cluster_values(std::vector<double> values, double tol) {
  std::vector<std::pair<double, int>> pairs;
  pairs.reserve(values.size());
  for (double v : values) pairs.emplace_back(v, 1);
  return merge_spectrum_pairs(std::move(pairs), tol);
}

Spectrum spectrum(const LoopGraph& lg) {
  return cluster_values(eigenvalues(adjacency(lg)));
}

std::vector<std::int64_t> power_traces(const LoopGraph& lg, int kmax) {
  if (kmax < 1 || kmax > 4) {
    throw std::invalid_argument("power_traces supports 1 <= kmax <= 4");
  }
  const int n = lg.order();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : lg.base().edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1;
    a[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (int v : lg.loops()) a[static_cast<std::size_t>(v) * n + v] = 1;

  auto trace = [n](const std::vector<std::int64_t>& m) {
    std::int64_t t = 0;
    for (int i = 0; i < n; ++i) t += m[static_cast<std::size_t>(i) * n + i];
    return t;
  };

  std::vector<std::int64_t> traces;
  std::vector<std::int64_t> power = a;
  traces.push_back(trace(power));
  for (int k = 2; k <= kmax; ++k) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        std::int64_t pil = power[static_cast<std::size_t>(i) * n + l];
        if (pil == 0) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<std::size_t>(i) * n + j] +=
              pil * a[static_cast<std::size_t>(l) * n + j];
      }
    power = std::move(next);
    traces.push_back(trace(power));
  }
  return traces;
}

}  // namespace slgraph
