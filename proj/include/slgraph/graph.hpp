#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slgraph {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

// Simple undirected labeled graph on vertices 0..order-1.
// Construction canonicalizes the edge list and rejects self-pairs,
// duplicates, and out-of-range endpoints.
class Graph {
 public:
  explicit Graph(int order, std::vector<Edge> edges = {});

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;

  std::vector<int> degrees() const;
  int max_degree() const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;             // sorted, unique, u < v
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

// A graph together with the subset of vertices carrying a self-loop.
// The adjacency matrix is A(base) plus a unit diagonal entry per loop.
class LoopGraph {
 public:
  LoopGraph(Graph base, std::vector<int> loop_vertices);

  const Graph& base() const { return base_; }
  const std::vector<int>& loops() const { return loops_; }  // sorted
  int order() const { return base_.order(); }
  int size() const { return base_.size(); }
  int loop_count() const { return static_cast<int>(loops_.size()); }
  bool has_loop(int v) const;
  std::uint64_t loop_mask() const;  // requires order <= 64

 private:
  Graph base_;
  std::vector<int> loops_;  // sorted, unique
};

LoopGraph with_loops(Graph g, std::vector<int> loop_vertices);
LoopGraph with_loop_mask(Graph g, std::uint64_t mask);
LoopGraph with_all_loops(Graph g);

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

// Generators. Sizes must be >= 1 (cycles >= 3).
Graph complete_graph(int order);
Graph complete_bipartite_graph(int left_size, int right_size);
Graph path_graph(int order);
Graph cycle_graph(int order);
Graph empty_graph(int order);

Graph complement(const Graph& g);

// BFS 2-coloring. Isolated vertices go to the left part. Returns nothing
// when an odd cycle makes a proper 2-coloring impossible.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

struct SemiregularCheck {
  bool semiregular = false;         // every base degree is a or b
  bool loop_degree_pattern = false; // b == a+1, deg a exactly on loop vertices
};
SemiregularCheck is_semiregular(const LoopGraph& lg, int a, int b);

// Exhaustive enumeration of labeled graphs on a fixed vertex set.
// Edge bit k of a code corresponds to the k-th pair (u,v), u < v, in
// lexicographic order, so code -> graph is a bijection.
inline constexpr int kMaxEnumerationOrder = 7;
std::uint64_t labeled_graph_count(int order);
Graph labeled_graph_from_code(int order, std::uint64_t code);

class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int order);
  std::optional<Graph> next();

 private:
  int order_;
  std::uint64_t code_ = 0;
  std::uint64_t total_;
};

// Line-oriented text format:
//   n <count>
//   e <u> <v>
//   l <v>
// Blank lines are ignored; any other line kind is an error.
LoopGraph parse_loop_graph(const std::string& text);
LoopGraph read_loop_graph(const std::string& path);
std::string to_text(const LoopGraph& lg);

}  // namespace slgraph
