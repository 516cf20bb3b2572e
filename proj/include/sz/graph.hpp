#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sz/matrix.hpp"

namespace sz {

/// Undirected edge between 0-based nodes, stored with u < v.
struct Edge {
  Index u = 0;
  Index v = 0;
  std::int64_t cost = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with positive integer costs.
///
/// Edges are kept canonical: u < v, sorted, at most one edge per pair.
class Graph {
 public:
  /// Default cap on edge costs accepted by parse() and the constructor.
  static constexpr std::int64_t kDefaultCostCap = std::int64_t{1} << 20;

  Graph() = default;

  /// Validates ids and costs, collapses parallel edges to the cheapest one.
  Graph(Index nodes, std::vector<Edge> edges, std::int64_t cost_cap = kDefaultCostCap);

  Index nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::int64_t max_cost() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Index nodes_ = 0;
  std::vector<Edge> edges_;
};

/// Reads the edge-list format:
///
///   c <comment>
///   p sp <nodes> <edges>
///   a <u> <v> <cost>     (1-based ids, each undirected edge listed once)
///
/// Errors carry the offending line number.
Graph parse_graph(std::string_view text, std::int64_t cost_cap = Graph::kDefaultCostCap);

/// Canonical text form; parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);

/// Zero diagonal, edge costs at edge positions, +inf elsewhere.
WeightMatrix build_matrix(const Graph& g);

struct ComponentPartition {
  std::vector<Index> component_of;
  /// Node lists in ascending order, components ordered by smallest node.
  std::vector<std::vector<Index>> members;

  std::size_t count() const { return members.size(); }
};

ComponentPartition components(const Graph& g);

/// Induced subgraph on `nodes` (ascending), renumbered 0..k-1.
Graph induced_subgraph(const Graph& g, const std::vector<Index>& nodes);

/// G(n, p) with costs uniform in {1..max_cost}, resampled until connected.
/// Deterministic for a given seed. Throws InvalidArgument if no connected
/// sample turns up within `max_attempts`.
Graph random_connected_graph(Index nodes, double edge_prob, std::int64_t max_cost,
                             std::uint64_t seed, int max_attempts = 10000);

}  // namespace sz
