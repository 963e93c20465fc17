#ifndef PARKLC_ENUMERATORS_HPP
#define PARKLC_ENUMERATORS_HPP

#include <span>
#include <vector>

#include "parklc/errors.hpp"
#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"

namespace parklc {

// Tree on vertices 0..vertex_count-1 rooted at 0, stored as the parent of each
// non-root vertex on its path toward 0.
class LabeledTree {
 public:
  // parent[0] is ignored. Throws std::invalid_argument unless every vertex
  // reaches 0 without a cycle.
  explicit LabeledTree(std::vector<Vertex> parent);

  Vertex vertex_count() const { return static_cast<Vertex>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_.at(v); }

  // Edges {v, parent(v)} for v = 1..n, each stored with the smaller label first.
  std::vector<Edge> edges() const;
  MultiGraph to_graph() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  std::vector<Vertex> parent_;
};

// Standard Prüfer decoding for trees on vertex_count >= 2 vertices; the
// sequence must have vertex_count - 2 labels in [0, vertex_count).
LabeledTree prufer_decode(std::span<const Vertex> sequence, Vertex vertex_count);

// Pairs (i, j) with 0 < i < j and j on the path from i to the root.
std::size_t inversion_count(const LabeledTree& t);

inline constexpr Vertex kTreeVertexCap = 9;

// I_n(x) over all labeled trees on n vertices {0..n-1}; I_1 = 1. Note the
// vertex count is n, so I_{n+1} pairs with parking functions of length n.
IntPolynomial inversion_enumerator(Vertex n, unsigned threads = 1);

inline constexpr Vertex kConnectedVertexCap = 7;

// C_n(x): labeled connected simple graphs on n vertices graded by edge count.
IntPolynomial connected_edge_enumerator(Vertex n, unsigned threads = 1);

}  // namespace parklc

#endif  // PARKLC_ENUMERATORS_HPP
