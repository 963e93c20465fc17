#ifndef PARKLC_CORPUS_HPP
#define PARKLC_CORPUS_HPP

#include <string>
#include <vector>

#include "parklc/multigraph.hpp"

namespace parklc {

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

// One representative per isomorphism class of connected multigraphs with
// 1..max_vertices vertices and at most max_edges edges. Ordered by vertex
// count, then edge count, then generation order; the order is deterministic.
std::vector<MultiGraph> connected_multigraphs(Vertex max_vertices, std::size_t max_edges,
                                              bool allow_loops);

// Graphs for the identity checks. Every graph is connected; with_loops adds a
// few looped instances, which only the Tutte-level checks can take.
std::vector<NamedGraph> named_corpus(Vertex max_complete, bool with_loops);

}  // namespace parklc

#endif  // PARKLC_CORPUS_HPP
