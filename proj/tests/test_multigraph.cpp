#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parklc/multigraph.hpp"

using namespace parklc;

namespace {

std::string key_of(const MultiGraph& g) {
  auto k = canonical_key(g);
  REQUIRE(k.has_value());
  return *k;
}

EdgeSubset single(const MultiGraph& g, EdgeIndex e) {
  EdgeSubset s = g.no_edges();
  s.set(e);
  return s;
}

}  // namespace

TEST_CASE("constructors and validation") {
  CHECK(complete_graph(3).vertex_count() == 3);
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_graph(7).edge_count() == 21);
  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::out_of_range);

  MultiGraph g(2);
  g.add_edge(1, 1);
  g.add_edge(0, 1);
  CHECK(g.degree(1) == 3);
  CHECK(g.loop_count() == 1);
  CHECK(g.multiplicity(1, 1) == 1);
  CHECK(g.multiplicity(1, 0) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
}

TEST_CASE("delete_edge examples") {
  const MultiGraph path = delete_edge(complete_graph(3), 2);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(key_of(path) == key_of(path_graph(3)));

  const MultiGraph empty = delete_edge(path_graph(2), 0);
  CHECK(empty.vertex_count() == 2);
  CHECK(empty.edge_count() == 0);

  const MultiGraph single_edge = delete_edge(banana_graph(), 1);
  CHECK(single_edge.edge_count() == 1);
  CHECK(single_edge.multiplicity(0, 1) == 1);
  CHECK_THROWS_AS(delete_edge(banana_graph(), 2), std::out_of_range);
}

TEST_CASE("contract_edge examples") {
  const MultiGraph fat = contract_edge(complete_graph(3), 0);
  CHECK(fat.vertex_count() == 2);
  CHECK(fat.multiplicity(0, 1) == 2);

  const MultiGraph looped = contract_edge(banana_graph(), 0);
  CHECK(looped.vertex_count() == 1);
  CHECK(looped.edge_count() == 1);
  CHECK(looped.loop_count() == 1);

  const MultiGraph edge = contract_edge(path_graph(3), 1);
  CHECK(key_of(edge) == key_of(path_graph(2)));

  CHECK_THROWS_AS(contract_edge(named_graph("loop").value(), 0), std::invalid_argument);
}

TEST_CASE("contraction drops exactly one vertex and one edge") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiGraph g = oracle::random_multigraph(rng, 2 + trial % 6, 1 + trial % 9, true);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).is_loop()) continue;
      const MultiGraph c = contract_edge(g, e);
      CHECK(c.vertex_count() == g.vertex_count() - 1);
      CHECK(c.edge_count() == g.edge_count() - 1);
      CHECK(component_count(c) == component_count(g));
    }
  }
}

TEST_CASE("component_count examples") {
  const MultiGraph k3 = complete_graph(3);
  CHECK(component_count(k3, k3.all_edges()) == 1);
  CHECK(component_count(k3, k3.no_edges()) == 3);
  const MultiGraph k4 = complete_graph(4);
  CHECK(component_count(k4, single(k4, 0)) == 3);
  CHECK_THROWS_AS(component_count(k4, EdgeSubset(3)), std::invalid_argument);
}

TEST_CASE("component_count never increases when edges are added") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = oracle::random_multigraph(rng, 1 + trial % 8, trial % 12, true);
    EdgeSubset s = g.no_edges();
    std::size_t previous = component_count(g, s);
    CHECK(previous == g.vertex_count());
    std::vector<EdgeIndex> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (EdgeIndex e : order) {
      s.set(e);
      const std::size_t now = component_count(g, s);
      CHECK(now <= previous);
      CHECK(previous - now <= 1);
      previous = now;
    }
    CHECK(previous == component_count(g));
  }
}

TEST_CASE("connected_components splits and relabels") {
  MultiGraph g(5, {{3, 4}, {0, 2}, {2, 2}});
  const auto parts = connected_components(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].vertex_count() == 2);
  CHECK(parts[0].edge_count() == 2);
  CHECK(parts[0].loop_count() == 1);
  CHECK(parts[1].vertex_count() == 1);
  CHECK(parts[2].vertex_count() == 2);
  CHECK(parts[2].multiplicity(0, 1) == 1);
}

TEST_CASE("canonical_key examples") {
  const MultiGraph a(3, {{0, 1}, {1, 2}, {2, 0}});
  const MultiGraph b(3, {{2, 1}, {0, 2}, {1, 0}});
  CHECK(key_of(a) == key_of(b));
  CHECK(key_of(a) != key_of(path_graph(3)));
  CHECK(key_of(banana_graph()) != key_of(MultiGraph(4, {{0, 1}, {2, 3}})));
  // Loop position matters; isolated vertices do not.
  CHECK(key_of(MultiGraph(3, {{0, 1}, {1, 2}, {0, 0}})) !=
        key_of(MultiGraph(3, {{0, 1}, {1, 2}, {1, 1}})));
  CHECK(key_of(MultiGraph(5, {{1, 3}})) == key_of(path_graph(2)));
  CHECK_FALSE(canonical_key(path_graph(kCanonicalVertexCap + 1)).has_value());
  CHECK(canonical_key(path_graph(kCanonicalVertexCap)).has_value());
}

TEST_CASE("canonical_key is invariant under random relabeling") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + trial % 8;
    const MultiGraph g = oracle::random_multigraph(rng, n, trial % 13, trial % 3 == 0);
    const std::string k = key_of(g);
    for (int r = 0; r < 3; ++r) CHECK(key_of(oracle::random_relabel(rng, g)) == k);
  }
  // Highly symmetric inputs stress the pruning.
  CHECK(key_of(oracle::random_relabel(rng, complete_graph(9))) == key_of(complete_graph(9)));
  CHECK(key_of(oracle::random_relabel(rng, cycle_graph(10))) == key_of(cycle_graph(10)));
}

TEST_CASE("canonical_key separates non-isomorphic graphs with equal degree sequences") {
  // C6 versus two disjoint triangles: both 2-regular on 6 vertices.
  const MultiGraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(key_of(cycle_graph(6)) != key_of(two_triangles));
  // Prism versus K_{3,3}: both cubic on 6 vertices.
  const MultiGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const MultiGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(key_of(prism) != key_of(k33));
}

TEST_CASE("delete then re-insert keeps the key") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = oracle::random_multigraph(rng, 2 + trial % 6, 1 + trial % 10, true);
    const std::string k = key_of(g);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      MultiGraph h = delete_edge(g, e);
      h.add_edge(g.edge(e).u, g.edge(e).v);
      CHECK(key_of(h) == k);
    }
  }
}

TEST_CASE("graph json") {
  const MultiGraph g(3, {{0, 1}, {1, 1}, {0, 1}});
  const auto j = to_json(g);
  CHECK(j.dump() == R"({"vertices":3,"edges":[[0,1],[1,1],[0,1]]})");
  const MultiGraph back = multigraph_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.vertex_count() == 3);
  CHECK(back.edges() == g.edges());

  auto bad = [](const char* text) { return multigraph_from_json(nlohmann::json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"vertices":2,"edges":[[0,2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"vertices":0,"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"vertices":-1,"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"vertices":2,"edges":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"vertices":2,"edges":[[0,"1"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"([1,2])"), std::invalid_argument);
}

TEST_CASE("named graphs") {
  CHECK(named_graph("complete:5")->edge_count() == 10);
  CHECK(named_graph("cycle:4")->edge_count() == 4);
  CHECK(named_graph("path:4")->edge_count() == 3);
  CHECK(named_graph("banana")->multiplicity(0, 1) == 2);
  CHECK(named_graph("banana:4")->multiplicity(0, 1) == 4);
  CHECK(named_graph("loop")->loop_count() == 1);
  CHECK(named_graph("bridge")->edge_count() == 1);
  CHECK_FALSE(named_graph("triangle.json").has_value());
  CHECK_FALSE(named_graph("complete:x").has_value());
  CHECK(describe(banana_graph()) == "V=2 E=[0-1 0-1]");
}
