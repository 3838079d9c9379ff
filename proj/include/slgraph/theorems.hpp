#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slgraph/graph.hpp"

namespace slgraph {

// Tolerance used by the verification sweeps when comparing eigenvalues
// and energies against exact statements.
inline constexpr double kSweepTol = 1e-8;

struct Counterexample {
  std::string graph_encoding;  // reparsable text format, loops included
  std::vector<int> loops;
  std::string detail;
};

struct VerificationOutcome {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> failures;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

// {"theorem_id", "instances_checked", "failures", "elapsed_ms", "notes"}.
std::string to_json_string(const VerificationOutcome& outcome, int indent = -1);

struct SweepOptions {
  int threads = 0;                  // 0 = hardware concurrency, capped at 8
  std::size_t max_failures = 1000;  // stored counterexamples after dedup
};

// Structural classification of a connected piece of a loop graph:
// isolated loopless vertex, loopless complete graph (order >= 2),
// complete graph with a loop on every vertex, or anything else.
struct ComponentClass {
  enum class Kind { K1, Kr, KrHat, Other };
  Kind kind = Kind::Other;
  int order = 0;
};

std::vector<ComponentClass> classify_components(const LoopGraph& lg);

bool structurally_all_positive(const std::vector<ComponentClass>& classes);
bool structurally_nonnegative(const std::vector<ComponentClass>& classes);
bool structurally_one_distinct(const std::vector<ComponentClass>& classes);
bool structurally_two_distinct(const std::vector<ComponentClass>& classes);

// Compares computed power traces against the exact closed-walk counts
// (loop count for k=1, 2*size + loops for k=2). The comparison is split
// out so the harness itself can be exercised with corrupted inputs.
std::optional<std::string> trace_identity_violation(
    const LoopGraph& lg, const std::vector<std::int64_t>& traces);

// Exhaustive sweeps over all labeled graphs up to max_n and all loop
// subsets. Each returns the instance count and any counterexamples found
// (expected none; a failure indicates an implementation bug).

// Integer trace identities for k=1,2 on every (graph, loop set); cubic
// trace formula on every complete bipartite graph with part sizes up to
// max_part and every loop placement.
VerificationOutcome verify_trace_identities(int max_n, int max_part = 6,
                                            const SweepOptions& opts = {});

// On connected graphs: the reflected multiset {1 - lambda_i(G_S)} equals
// the spectrum of the complementary-loop graph for every S exactly when
// the graph is bipartite. Both directions are asserted.
VerificationOutcome verify_reflection(int max_n, const SweepOptions& opts = {});

// On bipartite graphs: energy is invariant under complementing the loop
// set, and never below the loopless energy.
VerificationOutcome verify_energy_equality(int max_n,
                                           const SweepOptions& opts = {});
VerificationOutcome verify_energy_dominance(int max_n,
                                            const SweepOptions& opts = {});

// Energy upper bound, lambda_1 bounds, the lambda_1 = order
// characterization, and the semi-regular equality condition.
VerificationOutcome verify_bounds(int max_n, const SweepOptions& opts = {});

// Positive / non-negative spectrum vs. component structure, both ways.
VerificationOutcome verify_sign_characterizations(int max_n,
                                                  const SweepOptions& opts = {});

// One / two distinct eigenvalues vs. component structure, both ways.
VerificationOutcome verify_distinct_counts(int max_n,
                                           const SweepOptions& opts = {});

// Best loop placement for a single graph: maximizes the energy gain over
// all non-empty loop subsets (2^order - 1 of them; order is capped at 20).
struct ExploreResult {
  std::vector<int> best_loops;
  double base_energy = 0.0;
  double best_energy = 0.0;
  double gain = 0.0;
};
inline constexpr int kMaxExploreOrder = 20;
ExploreResult explore_conjecture(const Graph& g);

// Runs the explorer over every connected graph up to max_n. A graph of
// order >= 2 whose best gain is not strictly positive is a counterexample;
// the single order-1 graph attains gain 0 and is recorded as a note.
VerificationOutcome explore_conjecture_sweep(int max_n,
                                             const SweepOptions& opts = {});

}  // namespace slgraph
