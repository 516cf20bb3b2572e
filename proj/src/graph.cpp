#include "sz/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "sz/errors.hpp"

namespace sz {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return v;
}

class UnionFind {
 public:
  explicit UnionFind(Index n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Index> parent_;
};

}  // namespace

Graph::Graph(Index nodes, std::vector<Edge> edges, std::int64_t cost_cap) : nodes_(nodes) {
  if (nodes < 1) throw InvalidInput("graph needs at least one node");
  std::map<std::pair<Index, Index>, std::int64_t> best;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= nodes || e.v < 0 || e.v >= nodes) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("self-loops are not allowed");
    if (e.cost < 1) throw InvalidInput("edge costs must be >= 1");
    if (e.cost > cost_cap) {
      throw InvalidInput("edge cost " + std::to_string(e.cost) + " exceeds cap " +
                         std::to_string(cost_cap));
    }
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = best.try_emplace(key, e.cost);
    if (!inserted) it->second = std::min(it->second, e.cost);
  }
  edges_.reserve(best.size());
  for (const auto& [key, cost] : best) edges_.push_back({key.first, key.second, cost});
}

std::int64_t Graph::max_cost() const {
  std::int64_t w = 0;
  for (const Edge& e : edges_) w = std::max(w, e.cost);
  return w;
}

Graph parse_graph(std::string_view text, std::int64_t cost_cap) {
  std::size_t line_no = 0;
  Index nodes = -1;
  std::int64_t declared_edges = 0;
  std::vector<Edge> edges;

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto f = split_fields(line);
    if (f.empty() || f[0] == "c") continue;

    if (f[0] == "p") {
      if (nodes >= 0) throw ParseError(line_no, "duplicate problem line");
      if (f.size() != 4 || f[1] != "sp") throw ParseError(line_no, "expected 'p sp <n> <m>'");
      nodes = parse_int(f[2], line_no, "node count");
      declared_edges = parse_int(f[3], line_no, "edge count");
      if (nodes < 1) throw ParseError(line_no, "node count must be >= 1");
      if (declared_edges < 0) throw ParseError(line_no, "edge count must be >= 0");
    } else if (f[0] == "a") {
      if (nodes < 0) throw ParseError(line_no, "arc before problem line");
      if (f.size() != 4) throw ParseError(line_no, "expected 'a <u> <v> <cost>'");
      const auto u = parse_int(f[1], line_no, "node id");
      const auto v = parse_int(f[2], line_no, "node id");
      const auto w = parse_int(f[3], line_no, "cost");
      if (u < 1 || u > nodes || v < 1 || v > nodes) {
        throw ParseError(line_no, "node id out of range 1.." + std::to_string(nodes));
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      if (w < 1) throw ParseError(line_no, "cost must be >= 1");
      if (w > cost_cap) {
        throw ParseError(line_no, "cost exceeds cap " + std::to_string(cost_cap));
      }
      edges.push_back({u - 1, v - 1, w});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(f[0]) + "'");
    }
  }
  if (nodes < 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != declared_edges) {
    throw ParseError(line_no, "problem line declares " + std::to_string(declared_edges) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph(nodes, std::move(edges), cost_cap);
}

std::string render_graph(const Graph& g) {
  std::string out = "p sp " + std::to_string(g.nodes()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "a " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
           std::to_string(e.cost) + "\n";
  }
  return out;
}

WeightMatrix build_matrix(const Graph& g) {
  Dense<ExtInt> d = Dense<ExtInt>::Constant(g.nodes(), g.nodes(), kInf);
  d.diagonal().setConstant(ExtInt(0));
  for (const Edge& e : g.edges()) {
    d(e.u, e.v) = e.cost;
    d(e.v, e.u) = e.cost;
  }
  return WeightMatrix(std::move(d));
}

ComponentPartition components(const Graph& g) {
  UnionFind uf(g.nodes());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);

  ComponentPartition p;
  p.component_of.assign(static_cast<std::size_t>(g.nodes()), -1);
  std::vector<Index> id_of_root(static_cast<std::size_t>(g.nodes()), -1);
  for (Index v = 0; v < g.nodes(); ++v) {
    const Index r = uf.find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<Index>(p.members.size());
      p.members.emplace_back();
    }
    p.component_of[v] = id_of_root[r];
    p.members[id_of_root[r]].push_back(v);
  }
  return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<Index>& nodes) {
  std::vector<Index> local(static_cast<std::size_t>(g.nodes()), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<Index>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v], e.cost});
  }
  return Graph(static_cast<Index>(nodes.size()), std::move(edges),
               std::max<std::int64_t>(g.max_cost(), 1));
}

Graph random_connected_graph(Index nodes, double edge_prob, std::int64_t max_cost,
                             std::uint64_t seed, int max_attempts) {
  if (nodes < 1) throw InvalidArgument("node count must be >= 1");
  if (max_cost < 1) throw InvalidArgument("max cost must be >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::uniform_int_distribution<std::int64_t> cost(1, max_cost);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Index u = 0; u < nodes; ++u) {
      for (Index v = u + 1; v < nodes; ++v) {
        if (coin(rng)) edges.push_back({u, v, cost(rng)});
      }
    }
    Graph g(nodes, std::move(edges), max_cost);
    if (components(g).count() == 1) return g;
  }
  throw InvalidArgument("no connected sample within the attempt budget; raise edge_prob");
}

}  // namespace sz
