#ifndef PARKLC_MULTIGRAPH_HPP
#define PARKLC_MULTIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "json.hpp"

namespace parklc {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

// Subset of a graph's (or matroid's) edge indices; bit k set means edge k is in S.
using EdgeSubset = boost::dynamic_bitset<>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled multigraph on vertices 0..vertex_count-1. Parallel edges and loops
// are allowed. The edge order only fixes iteration order.
class MultiGraph {
 public:
  explicit MultiGraph(Vertex vertex_count, std::vector<Edge> edges = {});

  Vertex vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const;

  void add_edge(Vertex u, Vertex v);

  // Loops add 2 to the degree of their vertex.
  std::size_t degree(Vertex v) const;
  std::size_t loop_count() const;
  bool has_loops() const { return loop_count() > 0; }
  bool is_connected() const;

  // Number of edges joining u and v (u == v counts loops at u).
  std::size_t multiplicity(Vertex u, Vertex v) const;

  EdgeSubset all_edges() const { return EdgeSubset(edges_.size()).set(); }
  EdgeSubset no_edges() const { return EdgeSubset(edges_.size()); }

 private:
  Vertex vertex_count_;
  std::vector<Edge> edges_;
};

MultiGraph complete_graph(Vertex n);
MultiGraph cycle_graph(Vertex n);
MultiGraph path_graph(Vertex n);
// Two vertices joined by `copies` parallel edges.
MultiGraph banana_graph(std::size_t copies = 2);

MultiGraph delete_edge(const MultiGraph& g, EdgeIndex e);

// Merges the endpoints of e into the smaller label; labels above the larger
// endpoint shift down by one. Other copies of e become loops.
MultiGraph contract_edge(const MultiGraph& g, EdgeIndex e);

// Components of the spanning subgraph (all vertices, edges in s).
std::size_t component_count(const MultiGraph& g, const EdgeSubset& s);
std::size_t component_count(const MultiGraph& g);

// Splits g into its connected components (each relabeled from 0, edges in
// original order). Components are ordered by smallest original vertex.
std::vector<MultiGraph> connected_components(const MultiGraph& g);

inline constexpr Vertex kCanonicalVertexCap = 10;

// Isomorphism-invariant key: equal iff the multigraphs are isomorphic,
// including loop multiplicities. Isolated vertices are ignored. Returns
// nullopt when more than kCanonicalVertexCap non-isolated vertices remain.
std::optional<std::string> canonical_key(const MultiGraph& g);

// {"vertices": n, "edges": [[u, v], ...]}
nlohmann::ordered_json to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const nlohmann::json& j);

// Built-in names: complete:N, cycle:N, path:N, banana, banana:K, loop, bridge.
std::optional<MultiGraph> named_graph(std::string_view name);

std::string describe(const MultiGraph& g);

}  // namespace parklc

#endif  // PARKLC_MULTIGRAPH_HPP
