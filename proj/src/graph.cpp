#include "slgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace slgraph {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 1) {
    throw std::invalid_argument("graph order must be at least 1, got " +
                                std::to_string(order));
  }
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("self-pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not an edge");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with order " + std::to_string(order));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) +
                                "," + std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(order_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order_);
  for (int v = 0; v < order_; ++v) d[v] = static_cast<int>(adj_[v].size());
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

LoopGraph::LoopGraph(Graph base, std::vector<int> loop_vertices)
    : base_(std::move(base)), loops_(std::move(loop_vertices)) {
  for (int v : loops_) {
    if (v < 0 || v >= base_.order()) {
      throw std::invalid_argument("loop vertex " + std::to_string(v) +
                                  " out of range for order " +
                                  std::to_string(base_.order()));
    }
  }
  std::sort(loops_.begin(), loops_.end());
  if (std::adjacent_find(loops_.begin(), loops_.end()) != loops_.end()) {
    throw std::invalid_argument("duplicate loop vertex");
  }
}

bool LoopGraph::has_loop(int v) const {
  return std::binary_search(loops_.begin(), loops_.end(), v);
}

std::uint64_t LoopGraph::loop_mask() const {
  if (order() > 64) {
    throw std::logic_error("loop_mask requires order <= 64");
  }
  std::uint64_t mask = 0;
  for (int v : loops_) mask |= std::uint64_t{1} << v;
  return mask;
}

LoopGraph with_loops(Graph g, std::vector<int> loop_vertices) {
  return LoopGraph(std::move(g), std::move(loop_vertices));
}

LoopGraph with_loop_mask(Graph g, std::uint64_t mask) {
  std::vector<int> loops;
  for (int v = 0; v < g.order() && v < 64; ++v) {
    if (mask >> v & 1) loops.push_back(v);
  }
  if (g.order() < 64 && (mask >> g.order()) != 0) {
    throw std::invalid_argument("loop mask has bits beyond the vertex range");
  }
  return LoopGraph(std::move(g), std::move(loops));
}

LoopGraph with_all_loops(Graph g) {
  std::vector<int> loops(g.order());
  for (int v = 0; v < g.order(); ++v) loops[v] = v;
  return LoopGraph(std::move(g), std::move(loops));
}

Graph complete_graph(int order) {
  if (order < 1) throw std::invalid_argument("complete graph needs order >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return Graph(order, std::move(edges));
}

Graph complete_bipartite_graph(int left_size, int right_size) {
  if (left_size < 1 || right_size < 1) {
    throw std::invalid_argument("complete bipartite graph needs part sizes >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(left_size) * right_size);
  for (int u = 0; u < left_size; ++u)
    for (int v = left_size; v < left_size + right_size; ++v)
      edges.emplace_back(u, v);
  return Graph(left_size + right_size, std::move(edges));
}

Graph path_graph(int order) {
  if (order < 1) throw std::invalid_argument("path graph needs order >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  return Graph(order, std::move(edges));
}

Graph cycle_graph(int order) {
  if (order < 3) throw std::invalid_argument("cycle graph needs order >= 3, got " +
                                             std::to_string(order));
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, order - 1);
  return Graph(order, std::move(edges));
}

Graph empty_graph(int order) {
  return Graph(order, {});
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::queue<int> queue;
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;  // component roots (and isolated vertices) go left
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;  // odd closed walk through v and w
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.order(); ++v) {
    (color[v] == 0 ? parts.left : parts.right).push_back(v);
  }
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

SemiregularCheck is_semiregular(const LoopGraph& lg, int a, int b) {
  SemiregularCheck check;
  const auto degs = lg.base().degrees();
  check.semiregular = std::all_of(degs.begin(), degs.end(),
                                  [&](int d) { return d == a || d == b; });
  if (b == a + 1) {
    check.loop_degree_pattern = true;
    for (int v = 0; v < lg.order(); ++v) {
      int expected = lg.has_loop(v) ? a : b;
      if (degs[v] != expected) {
        check.loop_degree_pattern = false;
        break;
      }
    }
  }
  return check;
}

std::uint64_t labeled_graph_count(int order) {
  if (order < 1 || order > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration order must be in [1, " +
                                std::to_string(kMaxEnumerationOrder) +
                                "], got " + std::to_string(order));
  }
  return std::uint64_t{1} << (order * (order - 1) / 2);
}

Graph labeled_graph_from_code(int order, std::uint64_t code) {
  if (code >= labeled_graph_count(order)) {
    throw std::invalid_argument("graph code out of range");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::popcount(code)));
  int bit = 0;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v, ++bit) {
      if (code >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(order, std::move(edges));
}

LabeledGraphStream::LabeledGraphStream(int order)
    : order_(order), total_(labeled_graph_count(order)) {}

std::optional<Graph> LabeledGraphStream::next() {
  if (code_ >= total_) return std::nullopt;
  return labeled_graph_from_code(order_, code_++);
}

namespace {

int parse_int_token(std::istringstream& line, const std::string& what,
                    const std::string& full_line) {
  std::string token;
  if (!(line >> token)) {
    throw std::invalid_argument("missing " + what + " in line: " + full_line);
  }
  try {
    std::size_t pos = 0;
    int value = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " token '" + token +
                                "' in line: " + full_line);
  }
}

}  // namespace

LoopGraph parse_loop_graph(const std::string& text) {
  std::istringstream input(text);
  std::string raw;
  std::optional<int> order;
  std::vector<Edge> edges;
  std::vector<int> loops;
  while (std::getline(input, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream line(raw);
    std::string kind;
    if (!(line >> kind)) continue;  // blank line
    if (kind == "n") {
      if (order) throw std::invalid_argument("duplicate 'n' line");
      order = parse_int_token(line, "vertex count", raw);
    } else if (kind == "e") {
      if (!order) throw std::invalid_argument("'e' line before 'n' line");
      int u = parse_int_token(line, "endpoint", raw);
      int v = parse_int_token(line, "endpoint", raw);
      edges.emplace_back(u, v);
    } else if (kind == "l") {
      if (!order) throw std::invalid_argument("'l' line before 'n' line");
      loops.push_back(parse_int_token(line, "loop vertex", raw));
    } else {
      throw std::invalid_argument("unknown line kind '" + kind + "'");
    }
    std::string extra;
    if (line >> extra) {
      throw std::invalid_argument("trailing token '" + extra +
                                  "' in line: " + raw);
    }
  }
  if (!order) throw std::invalid_argument("missing 'n' line");
  return LoopGraph(Graph(*order, std::move(edges)), std::move(loops));
}

LoopGraph read_loop_graph(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read graph file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_loop_graph(buffer.str());
}

std::string to_text(const LoopGraph& lg) {
  std::ostringstream out;
  out << "n " << lg.order() << "\n";
  for (const auto& [u, v] : lg.base().edges()) out << "e " << u << " " << v << "\n";
  for (int v : lg.loops()) out << "l " << v << "\n";
  return out.str();
}

}  // namespace slgraph
