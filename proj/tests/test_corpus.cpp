#include <set>

#include "doctest.h"
#include "parklc/corpus.hpp"

using namespace parklc;

TEST_CASE("connected multigraph counts up to isomorphism") {
  // Loopless connected multigraphs: 2 vertices with k edges, one each.
  CHECK(connected_multigraphs(2, 4, false).size() == 1 + 4);
  // 3 vertices, <= 3 edges, loopless: path, triangle, path with a doubled edge.
  CHECK(connected_multigraphs(3, 3, false).size() == 1 + 3 + 3);
  // A single vertex with up to 2 loops.
  CHECK(connected_multigraphs(1, 2, true).size() == 3);
}

TEST_CASE("corpus members are connected, distinct and within bounds") {
  const auto all = connected_multigraphs(4, 6, true);
  std::set<std::string> keys;
  for (const MultiGraph& g : all) {
    CHECK(g.is_connected());
    CHECK(g.vertex_count() <= 4);
    CHECK(g.edge_count() <= 6);
    keys.insert(canonical_key(g).value());
  }
  CHECK(keys.size() == all.size());
  CHECK(all.size() == connected_multigraphs(4, 6, true).size());
}

TEST_CASE("named corpus") {
  const auto plain = named_corpus(5, false);
  const auto looped = named_corpus(5, true);
  CHECK(looped.size() > plain.size());
  bool parallel = false;
  for (const NamedGraph& ng : plain) {
    CHECK(ng.graph.is_connected());
    CHECK_FALSE(ng.graph.has_loops());
    for (const Edge& e : ng.graph.edges()) parallel = parallel || ng.graph.multiplicity(e.u, e.v) > 1;
  }
  CHECK(parallel);
  bool loops = false;
  for (const NamedGraph& ng : looped) loops = loops || ng.graph.has_loops();
  CHECK(loops);
}
