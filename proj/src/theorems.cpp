#include "slgraph/theorems.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "slgraph/energy.hpp"
#include "slgraph/spectral.hpp"

namespace slgraph {

namespace {

using Clock = std::chrono::steady_clock;

int resolve_threads(const SweepOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(static_cast<int>(hw ? hw : 1), 1, 8);
}

struct ShardState {
  std::uint64_t instances = 0;
  std::vector<std::pair<std::string, Counterexample>> failures;  // key, payload
  std::vector<std::string> notes;
  std::set<std::string> seen;
  double min_gap = std::numeric_limits<double>::infinity();
};

// Failure reports are deduplicated by degree sequence + loop count +
// rounded spectrum; every labeled instance is still checked and counted.
void record_failure(ShardState& state, const Graph& g, std::uint64_t mask,
                    const std::string& detail) {
  LoopGraph lg = with_loop_mask(g, mask);
  auto degs = g.degrees();
  std::sort(degs.begin(), degs.end());
  std::ostringstream key;
  for (int d : degs) key << d << ',';
  key << '|' << lg.loop_count() << '|';
  for (const auto& [value, mult] : spectrum(lg).pairs) {
    key << std::llround(value * 1e6) << 'x' << mult << ',';
  }
  if (!state.seen.insert(key.str()).second) return;
  state.failures.push_back(
      {key.str(), Counterexample{to_text(lg), lg.loops(), detail}});
}

// Runs per_graph over every labeled graph of order 1..max_n, sharding the
// code range of each order across threads. Shards are merged in index
// order, so results do not depend on the thread count.
template <typename PerGraph>
VerificationOutcome run_graph_sweep(std::string theorem_id, int max_n,
                                    const SweepOptions& opts,
                                    PerGraph per_graph,
                                    double* min_gap_out = nullptr) {
  const auto start = Clock::now();
  const int threads = resolve_threads(opts);
  std::vector<ShardState> shards(threads);
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      if (lo >= hi) continue;
      pool.emplace_back([&, t, lo, hi, n] {
        for (std::uint64_t code = lo; code < hi; ++code) {
          Graph g = labeled_graph_from_code(n, code);
          try {
            per_graph(g, shards[t]);
          } catch (const std::exception& e) {
            record_failure(shards[t], g, 0,
                           std::string("exception: ") + e.what());
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  VerificationOutcome out;
  out.theorem_id = std::move(theorem_id);
  std::set<std::string> seen;
  double min_gap = std::numeric_limits<double>::infinity();
  for (auto& shard : shards) {
    out.instances_checked += shard.instances;
    min_gap = std::min(min_gap, shard.min_gap);
    for (auto& [key, failure] : shard.failures) {
      if (!seen.insert(key).second) continue;
      if (out.failures.size() < opts.max_failures) {
        out.failures.push_back(std::move(failure));
      }
    }
    for (auto& note : shard.notes) out.notes.push_back(std::move(note));
  }
  if (min_gap_out) *min_gap_out = min_gap;
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
  return out;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

}  // namespace

std::string to_json_string(const VerificationOutcome& outcome, int indent) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : outcome.failures) {
    failures.push_back({{"graph_encoding", f.graph_encoding},
                        {"loops", f.loops},
                        {"detail", f.detail}});
  }
  nlohmann::json doc = {{"theorem_id", outcome.theorem_id},
                        {"instances_checked", outcome.instances_checked},
                        {"failures", failures},
                        {"elapsed_ms", outcome.elapsed_ms},
                        {"notes", outcome.notes}};
  return doc.dump(indent);
}

std::optional<std::string> trace_identity_violation(
    const LoopGraph& lg, const std::vector<std::int64_t>& traces) {
  if (traces.empty()) return "no traces supplied";
  const std::int64_t walks1 = lg.loop_count();
  if (traces[0] != walks1) {
    return "trace(A) = " + std::to_string(traces[0]) + ", expected " +
           std::to_string(walks1);
  }
  if (traces.size() >= 2) {
    const std::int64_t walks2 = 2 * static_cast<std::int64_t>(lg.size()) +
                                lg.loop_count();
    if (traces[1] != walks2) {
      return "trace(A^2) = " + std::to_string(traces[1]) + ", expected " +
             std::to_string(walks2);
    }
  }
  return std::nullopt;
}

VerificationOutcome verify_trace_identities(int max_n, int max_part,
                                            const SweepOptions& opts) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder) {
    throw std::invalid_argument("max_n must be in [1, 7]");
  }
  if (max_part < 1 || max_part > 6) {
    throw std::invalid_argument("max_part must be in [1, 6]");
  }
  auto outcome = run_graph_sweep(
      "traces", max_n, opts, [](const Graph& g, ShardState& state) {
        const std::uint64_t masks = std::uint64_t{1} << g.order();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          LoopGraph lg = with_loop_mask(g, mask);
          if (auto violation = trace_identity_violation(lg, power_traces(lg, 2))) {
            record_failure(state, g, mask, *violation);
          }
          ++state.instances;
        }
      });

  // Cubic closed-walk count on complete bipartite graphs: each walk of
  // length 3 uses a loop, so the total is 3(m*loops_right + n*loops_left)
  // plus one triple self-loop walk per looped vertex.
  const auto start = Clock::now();
  for (int m = 1; m <= max_part; ++m) {
    for (int n = 1; n <= max_part; ++n) {
      const Graph g = complete_bipartite_graph(m, n);
      const std::uint64_t masks = std::uint64_t{1} << (m + n);
      const std::uint64_t left_mask = (std::uint64_t{1} << m) - 1;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const int loops_left = std::popcount(mask & left_mask);
        const int loops_right = std::popcount(mask >> m);
        const std::int64_t expected =
            3 * (static_cast<std::int64_t>(m) * loops_right +
                 static_cast<std::int64_t>(n) * loops_left) +
            loops_left + loops_right;
        LoopGraph lg = with_loop_mask(g, mask);
        const auto traces = power_traces(lg, 3);
        std::optional<std::string> violation = trace_identity_violation(lg, traces);
        if (!violation && traces[2] != expected) {
          violation = "trace(A^3) = " + std::to_string(traces[2]) +
                      ", expected " + std::to_string(expected);
        }
        if (violation) {
          ShardState state;
          record_failure(state, g, mask, *violation);
          for (auto& [key, failure] : state.failures) {
            if (outcome.failures.size() < opts.max_failures) {
              outcome.failures.push_back(std::move(failure));
            }
          }
        }
        ++outcome.instances_checked;
      }
    }
  }
  outcome.elapsed_ms += std::chrono::duration_cast<std::chrono::milliseconds>(
                            Clock::now() - start)
                            .count();
  return outcome;
}

VerificationOutcome verify_reflection(int max_n, const SweepOptions& opts) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  return run_graph_sweep(
      "reflection", max_n, opts, [](const Graph& g, ShardState& state) {
        if (!is_connected(g)) return;
        const bool bipartite = is_bipartite(g);
        const int n = g.order();
        const std::uint64_t masks = std::uint64_t{1} << n;
        std::vector<std::vector<double>> eigs(masks);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          eigs[mask] = eigenvalues(adjacency(g, mask));
        }
        const std::uint64_t full = masks - 1;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          const auto& own = eigs[mask];
          const auto& other = eigs[full ^ mask];
          double discrepancy = 0.0;
          for (int i = 0; i < n; ++i) {
            discrepancy = std::max(
                discrepancy, std::abs(1.0 - own[n - 1 - i] - other[i]));
          }
          const bool holds = discrepancy <= kSweepTol;
          if (holds != bipartite) {
            record_failure(state, g, mask,
                           bipartite
                               ? "bipartite but reflection fails, discrepancy " +
                                     format_double(discrepancy)
                               : "not bipartite but reflection holds, "
                                 "discrepancy " +
                                     format_double(discrepancy));
          }
          ++state.instances;
        }
      });
}

namespace {

template <typename Check>
VerificationOutcome bipartite_energy_sweep(std::string id, int max_n,
                                           const SweepOptions& opts,
                                           Check check) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  return run_graph_sweep(
      std::move(id), max_n, opts, [check](const Graph& g, ShardState& state) {
        if (!is_bipartite(g)) return;
        const int n = g.order();
        const std::uint64_t masks = std::uint64_t{1} << n;
        std::vector<double> energies(masks);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          energies[mask] = energy_from_eigenvalues(
              eigenvalues(adjacency(g, mask)), n,
              std::popcount(mask));
        }
        check(g, energies, state);
      });
}

}  // namespace

VerificationOutcome verify_energy_equality(int max_n, const SweepOptions& opts) {
  return bipartite_energy_sweep(
      "energy-equality", max_n, opts,
      [](const Graph& g, const std::vector<double>& energies,
         ShardState& state) {
        const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
          const double diff = std::abs(energies[mask] - energies[full ^ mask]);
          if (diff > kSweepTol) {
            record_failure(state, g, mask,
                           "energy differs from complementary loop set by " +
                               format_double(diff));
          }
          ++state.instances;
        }
      });
}

VerificationOutcome verify_energy_dominance(int max_n, const SweepOptions& opts) {
  return bipartite_energy_sweep(
      "energy-dominance", max_n, opts,
      [](const Graph& g, const std::vector<double>& energies,
         ShardState& state) {
        const double base = energies[0];
        const std::uint64_t masks = std::uint64_t{1} << g.order();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          if (energies[mask] < base - kSweepTol) {
            record_failure(state, g, mask,
                           "loop energy " + format_double(energies[mask]) +
                               " below loopless energy " + format_double(base));
          }
          ++state.instances;
        }
      });
}

VerificationOutcome verify_bounds(int max_n, const SweepOptions& opts) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  return run_graph_sweep(
      "bounds", max_n, opts, [](const Graph& g, ShardState& state) {
        const int n = g.order();
        const int m = g.size();
        const int max_deg = g.max_degree();
        const bool complete = m == n * (n - 1) / 2;
        const auto degs = g.degrees();
        const std::uint64_t masks = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          const int loops = std::popcount(mask);
          const auto vals = eigenvalues(adjacency(g, mask));
          const double lambda1 = vals.front();
          const double e = energy_from_eigenvalues(vals, n, loops);
          const double bound = energy_upper_bound(n, m, loops);
          const double lower = (2.0 * m + loops) / n;

          if (e > bound + kSweepTol) {
            record_failure(state, g, mask,
                           "energy " + format_double(e) + " exceeds bound " +
                               format_double(bound));
          }
          if (lambda1 < lower - kSweepTol) {
            record_failure(state, g, mask,
                           "lambda1 " + format_double(lambda1) +
                               " below mean-degree bound " +
                               format_double(lower));
          }
          if (lambda1 > max_deg + 1.0 + kSweepTol) {
            record_failure(state, g, mask,
                           "lambda1 " + format_double(lambda1) +
                               " exceeds max degree + 1");
          }
          const bool at_order = std::abs(lambda1 - n) <= kSweepTol;
          const bool fully_looped_complete =
              complete && loops == n;
          if (at_order != fully_looped_complete) {
            record_failure(state, g, mask,
                           at_order ? "lambda1 = order on a graph that is not "
                                      "the fully looped complete graph"
                                    : "fully looped complete graph with "
                                      "lambda1 != order");
          }
          // Attained energy bound forces the two-level degree pattern.
          if (std::abs(e - bound) <= kSweepTol) {
            const auto eq = equality_degrees(n, m, loops);
            for (int v = 0; v < n; ++v) {
              const bool looped = (mask >> v & 1) != 0;
              const double want = looped ? eq.a : eq.b;
              if (std::abs(degs[v] - want) > 1e-6) {
                record_failure(state, g, mask,
                               "energy bound attained but degree pattern "
                               "violates the forced semi-regular pair");
                break;
              }
            }
          }
          ++state.instances;
        }
      });
}

namespace {

struct CompInfo {
  std::uint64_t mask = 0;
  int order = 0;
  bool complete = false;
};

std::vector<CompInfo> component_info(const Graph& g) {
  std::vector<CompInfo> infos;
  for (const auto& comp : components(g)) {
    CompInfo info;
    info.order = static_cast<int>(comp.size());
    for (int v : comp) info.mask |= std::uint64_t{1} << v;
    int internal_edges = 0;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (g.adjacent(comp[i], comp[j])) ++internal_edges;
    info.complete = internal_edges == info.order * (info.order - 1) / 2;
    infos.push_back(info);
  }
  return infos;
}

ComponentClass classify_one(const CompInfo& info, std::uint64_t loop_mask) {
  const int loops = std::popcount(info.mask & loop_mask);
  ComponentClass cls;
  cls.order = info.order;
  if (info.complete && loops == info.order) {
    cls.kind = ComponentClass::Kind::KrHat;
  } else if (info.order == 1 && loops == 0) {
    cls.kind = ComponentClass::Kind::K1;
  } else if (info.complete && loops == 0 && info.order >= 2) {
    cls.kind = ComponentClass::Kind::Kr;
  } else {
    cls.kind = ComponentClass::Kind::Other;
  }
  return cls;
}

std::vector<ComponentClass> classify_with_mask(const std::vector<CompInfo>& infos,
                                               std::uint64_t loop_mask) {
  std::vector<ComponentClass> classes;
  classes.reserve(infos.size());
  for (const auto& info : infos) classes.push_back(classify_one(info, loop_mask));
  return classes;
}

}  // namespace

std::vector<ComponentClass> classify_components(const LoopGraph& lg) {
  return classify_with_mask(component_info(lg.base()), lg.loop_mask());
}

bool structurally_all_positive(const std::vector<ComponentClass>& classes) {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) {
    return c.kind == ComponentClass::Kind::KrHat && c.order == 1;
  });
}

bool structurally_nonnegative(const std::vector<ComponentClass>& classes) {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) {
    return c.kind == ComponentClass::Kind::K1 ||
           c.kind == ComponentClass::Kind::KrHat;
  });
}

bool structurally_one_distinct(const std::vector<ComponentClass>& classes) {
  const bool all_isolated =
      std::all_of(classes.begin(), classes.end(), [](const auto& c) {
        return c.kind == ComponentClass::Kind::K1;
      });
  return all_isolated || structurally_all_positive(classes);
}

bool structurally_two_distinct(const std::vector<ComponentClass>& classes) {
  // Identical loopless complete components: values {r-1, -1}.
  const bool all_complete =
      std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return c.kind == ComponentClass::Kind::Kr &&
               c.order == classes.front().order;
      });
  if (all_complete) return true;
  // Identical fully looped complete components of order >= 2: values {r, 0}.
  const bool all_looped =
      std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return c.kind == ComponentClass::Kind::KrHat &&
               c.order == classes.front().order;
      });
  if (all_looped && classes.front().order >= 2) return true;
  // Single edges carrying exactly one loop: every copy contributes the
  // same pair (1 +- sqrt(5))/2. An order-2 component always has its edge,
  // so Other + order 2 pins this shape exactly.
  const bool all_half_looped_edges =
      std::all_of(classes.begin(), classes.end(), [](const auto& c) {
        return c.kind == ComponentClass::Kind::Other && c.order == 2;
      });
  if (all_half_looped_edges) return true;
  // Loopless edges mixed with looped vertices: {1, -1} meets {1}.
  bool has_edge = false;
  bool has_looped_vertex = false;
  bool only_edge_vertex_mix = true;
  for (const auto& c : classes) {
    if (c.kind == ComponentClass::Kind::Kr && c.order == 2) {
      has_edge = true;
    } else if (c.kind == ComponentClass::Kind::KrHat && c.order == 1) {
      has_looped_vertex = true;
    } else {
      only_edge_vertex_mix = false;
    }
  }
  if (only_edge_vertex_mix && has_edge && has_looped_vertex) return true;
  // Isolated vertices mixed with fully looped complete pieces of one
  // order: {0} meets {r, 0}.
  int hat_order = 0;
  bool has_isolated = false;
  for (const auto& c : classes) {
    if (c.kind == ComponentClass::Kind::K1) {
      has_isolated = true;
    } else if (c.kind == ComponentClass::Kind::KrHat) {
      if (hat_order == 0) hat_order = c.order;
      if (c.order != hat_order) return false;
    } else {
      return false;
    }
  }
  return has_isolated && hat_order > 0;
}

VerificationOutcome verify_sign_characterizations(int max_n,
                                                  const SweepOptions& opts) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  return run_graph_sweep(
      "signs", max_n, opts, [](const Graph& g, ShardState& state) {
        const auto infos = component_info(g);
        const std::uint64_t masks = std::uint64_t{1} << g.order();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          const auto vals = eigenvalues(adjacency(g, mask));
          const double smallest = vals.back();
          const auto classes = classify_with_mask(infos, mask);
          const bool positive = smallest > kSweepTol;
          const bool nonnegative = smallest > -kSweepTol;
          if (positive != structurally_all_positive(classes)) {
            record_failure(state, g, mask,
                           "positive-spectrum characterization mismatch, "
                           "smallest eigenvalue " +
                               format_double(smallest));
          }
          if (nonnegative != structurally_nonnegative(classes)) {
            record_failure(state, g, mask,
                           "non-negative-spectrum characterization mismatch, "
                           "smallest eigenvalue " +
                               format_double(smallest));
          }
          ++state.instances;
        }
      });
}

VerificationOutcome verify_distinct_counts(int max_n, const SweepOptions& opts) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  double min_gap = std::numeric_limits<double>::infinity();
  auto outcome = run_graph_sweep(
      "distinct-counts", max_n, opts,
      [](const Graph& g, ShardState& state) {
        const auto infos = component_info(g);
        const std::uint64_t masks = std::uint64_t{1} << g.order();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          const auto spec = cluster_values(eigenvalues(adjacency(g, mask)));
          for (std::size_t i = 0; i + 1 < spec.pairs.size(); ++i) {
            state.min_gap = std::min(
                state.min_gap, spec.pairs[i].first - spec.pairs[i + 1].first);
          }
          const auto classes = classify_with_mask(infos, mask);
          const std::size_t distinct = spec.pairs.size();
          if ((distinct == 1) != structurally_one_distinct(classes)) {
            record_failure(state, g, mask,
                           "one-distinct-eigenvalue characterization "
                           "mismatch, distinct count " +
                               std::to_string(distinct));
          }
          if ((distinct == 2) != structurally_two_distinct(classes)) {
            record_failure(state, g, mask,
                           "two-distinct-eigenvalue characterization "
                           "mismatch, distinct count " +
                               std::to_string(distinct));
          }
          ++state.instances;
        }
      },
      &min_gap);
  if (std::isfinite(min_gap)) {
    outcome.notes.push_back(
        "smallest gap between distinct clustered eigenvalues: " +
        format_double(min_gap));
  }
  return outcome;
}

ExploreResult explore_conjecture(const Graph& g) {
  if (g.order() > kMaxExploreOrder) {
    throw std::invalid_argument("explorer is limited to order <= " +
                                std::to_string(kMaxExploreOrder));
  }
  ExploreResult result;
  result.base_energy =
      energy_from_eigenvalues(eigenvalues(adjacency(g, 0)), g.order(), 0);
  const std::uint64_t masks = std::uint64_t{1} << g.order();
  std::uint64_t best_mask = 1;
  double best_energy = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < masks; ++mask) {
    const double e = energy_from_eigenvalues(
        eigenvalues(adjacency(g, mask)), g.order(), std::popcount(mask));
    if (e > best_energy) {
      best_energy = e;
      best_mask = mask;
    }
  }
  result.best_energy = best_energy;
  result.gain = best_energy - result.base_energy;
  for (int v = 0; v < g.order(); ++v) {
    if (best_mask >> v & 1) result.best_loops.push_back(v);
  }
  return result;
}

VerificationOutcome explore_conjecture_sweep(int max_n,
                                             const SweepOptions& opts) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("max_n must be in [1, 6]");
  }
  return run_graph_sweep(
      "conjecture-explorer", max_n, opts, [](const Graph& g, ShardState& state) {
        if (!is_connected(g)) return;
        const auto result = explore_conjecture(g);
        ++state.instances;
        if (g.order() == 1) {
          state.notes.push_back(
              "order-1 boundary: best gain " + format_double(result.gain) +
              " (strict inequality unattainable)");
          return;
        }
        if (result.gain <= 0.0) {
          record_failure(state, g, 0,
                         "no loop subset increases the energy; best gain " +
                             format_double(result.gain));
        }
      });
}

}  // namespace slgraph
