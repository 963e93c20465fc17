#ifndef PARKLC_SRC_DENSE_GRAPH_HPP
#define PARKLC_SRC_DENSE_GRAPH_HPP

// Internal: symmetric edge-multiplicity matrix and its canonical labeling.

#include <cstdint>
#include <string>
#include <vector>

#include "parklc/multigraph.hpp"

namespace parklc::detail {

// mult(i, j) = number of i–j edges; the diagonal holds loop counts.
class DenseGraph {
 public:
  explicit DenseGraph(Vertex n = 0) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}
  explicit DenseGraph(const MultiGraph& g);

  Vertex size() const { return n_; }
  std::uint32_t mult(Vertex i, Vertex j) const { return m_[i * n_ + j]; }
  void set_mult(Vertex i, Vertex j, std::uint32_t k) {
    m_[i * n_ + j] = k;
    m_[j * n_ + i] = k;
  }
  void add_mult(Vertex i, Vertex j, std::uint32_t k) { set_mult(i, j, mult(i, j) + k); }

  // Sum of off-diagonal multiplicities at v.
  std::uint32_t degree(Vertex v) const;
  std::uint32_t edge_count() const;

  // Vertices reachable from `from` without using the direct from–to edges.
  bool connected_avoiding(Vertex from, Vertex to) const;
  bool is_connected() const;

  // Merges b into a (a < b), turning a–b edges into loops on a, and drops b.
  DenseGraph contracted(Vertex a, Vertex b) const;
  DenseGraph without_isolated() const;
  DenseGraph permuted(const std::vector<Vertex>& order) const;

  MultiGraph to_multigraph() const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  Vertex n_;
  std::vector<std::uint32_t> m_;
};

struct CanonicalForm {
  // order[p] is the original vertex placed at canonical position p.
  std::vector<Vertex> order;
  std::vector<std::uint32_t> code;

  std::string key() const;
};

// Lexicographically smallest lower-triangle encoding over all vertex orders
// that list vertices by ascending (degree, loops, distinct neighbours).
// Branches whose partial encoding already exceeds the best are pruned.
CanonicalForm canonical_form(const DenseGraph& g);

}  // namespace parklc::detail

#endif  // PARKLC_SRC_DENSE_GRAPH_HPP
