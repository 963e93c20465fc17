#include "parklc/corpus.hpp"

#include <numeric>
#include <unordered_set>

namespace parklc {

namespace {

bool spans_connected(Vertex n, const std::vector<Edge>& edges) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  Vertex components = n;
  for (const Edge& e : edges) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::vector<MultiGraph> connected_multigraphs(Vertex max_vertices, std::size_t max_edges,
                                              bool allow_loops) {
  std::vector<MultiGraph> out;
  for (Vertex n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> slots;
    for (Vertex i = 0; i < n; ++i) {
      if (allow_loops) slots.push_back({i, i});
      for (Vertex j = i + 1; j < n; ++j) slots.push_back({i, j});
    }
    for (std::size_t m = 0; m <= max_edges; ++m) {
      std::unordered_set<std::string> seen;
      std::vector<Edge> chosen;
      // Multisets of size m over the slots, as nondecreasing slot indices.
      auto recurse = [&](auto&& self, std::size_t first) -> void {
        if (chosen.size() == m) {
          if (!spans_connected(n, chosen)) return;
          MultiGraph g(n, chosen);
          if (seen.insert(*canonical_key(g)).second) out.push_back(std::move(g));
          return;
        }
        for (std::size_t s = first; s < slots.size(); ++s) {
          chosen.push_back(slots[s]);
          self(self, s);
          chosen.pop_back();
        }
      };
      recurse(recurse, 0);
    }
  }
  return out;
}

std::vector<NamedGraph> named_corpus(Vertex max_complete, bool with_loops) {
  std::vector<NamedGraph> out;
  for (Vertex n = 2; n <= max_complete; ++n) {
    out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
  }
  out.push_back({"banana", banana_graph(2)});
  out.push_back({"banana:3", banana_graph(3)});
  for (Vertex n = 3; n <= 6; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
  for (Vertex n = 2; n <= 5; ++n) out.push_back({"path:" + std::to_string(n), path_graph(n)});
  // Triangle with one doubled side: contracting the double edge leaves a loop.
  out.push_back({"fat-triangle", MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})});
  if (with_loops) {
    out.push_back({"loop", MultiGraph(1, {{0, 0}})});
    out.push_back({"lollipop", MultiGraph(2, {{0, 1}, {1, 1}})});
    out.push_back({"looped-triangle", MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}, {2, 2}, {2, 2}})});
  }
  return out;
}

}  // namespace parklc
