#include "parklc/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dense_graph.hpp"

namespace parklc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --components_;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

void check_vertex(Vertex v, Vertex n) {
  if (v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                            ")");
  }
}

std::optional<Vertex> parse_count(std::string_view text) {
  Vertex value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

MultiGraph::MultiGraph(Vertex vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    check_vertex(e.u, vertex_count_);
    check_vertex(e.v, vertex_count_);
  }
}

const Edge& MultiGraph::edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge index " + std::to_string(e));
  return edges_[e];
}

void MultiGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u, vertex_count_);
  check_vertex(v, vertex_count_);
  edges_.push_back({u, v});
}

std::size_t MultiGraph::degree(Vertex v) const {
  check_vertex(v, vertex_count_);
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::size_t MultiGraph::loop_count() const {
  std::size_t loops = 0;
  for (const Edge& e : edges_) loops += e.is_loop();
  return loops;
}

bool MultiGraph::is_connected() const { return component_count(*this) <= 1; }

std::size_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
  std::size_t k = 0;
  for (const Edge& e : edges_) k += (e.u == u && e.v == v) || (e.u == v && e.v == u);
  return k;
}

MultiGraph complete_graph(Vertex n) {
  if (n == 0) throw std::invalid_argument("complete_graph requires n >= 1");
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph path_graph(Vertex n) {
  if (n == 0) throw std::invalid_argument("path_graph requires n >= 1");
  MultiGraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph banana_graph(std::size_t copies) {
  MultiGraph g(2);
  for (std::size_t k = 0; k < copies; ++k) g.add_edge(0, 1);
  return g;
}

MultiGraph delete_edge(const MultiGraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw std::out_of_range("delete_edge: edge index " + std::to_string(e));
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph contract_edge(const MultiGraph& g, EdgeIndex e) {
  const Edge target = g.edge(e);
  if (target.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
  const Vertex keep = std::min(target.u, target.v);
  const Vertex gone = std::max(target.u, target.v);
  auto relabel = [&](Vertex v) -> Vertex {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  MultiGraph out(g.vertex_count() - 1);
  for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
    if (k == e) continue;
    out.add_edge(relabel(g.edges()[k].u), relabel(g.edges()[k].v));
  }
  return out;
}

std::size_t component_count(const MultiGraph& g, const EdgeSubset& s) {
  if (s.size() != g.edge_count()) throw std::invalid_argument("edge subset size mismatch");
  UnionFind uf(g.vertex_count());
  for (auto k = s.find_first(); k != EdgeSubset::npos; k = s.find_next(k)) {
    uf.unite(g.edges()[k].u, g.edges()[k].v);
  }
  return uf.components();
}

std::size_t component_count(const MultiGraph& g) { return component_count(g, g.all_edges()); }

std::vector<MultiGraph> connected_components(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);

  // Roots are the smallest vertex in each component.
  std::vector<std::size_t> component_of(g.vertex_count());
  std::vector<Vertex> local(g.vertex_count());
  std::vector<Vertex> sizes;
  std::vector<std::size_t> root_index(g.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = uf.find(v);
    if (root_index[r] == SIZE_MAX) {
      root_index[r] = sizes.size();
      sizes.push_back(0);
    }
    component_of[v] = root_index[r];
    local[v] = sizes[root_index[r]]++;
  }
  std::vector<MultiGraph> out;
  out.reserve(sizes.size());
  for (Vertex size : sizes) out.emplace_back(size);
  for (const Edge& e : g.edges()) out[component_of[e.u]].add_edge(local[e.u], local[e.v]);
  return out;
}

std::optional<std::string> canonical_key(const MultiGraph& g) {
  const detail::DenseGraph dense = detail::DenseGraph(g).without_isolated();
  if (dense.size() > kCanonicalVertexCap) return std::nullopt;
  return detail::canonical_form(dense).key();
}

nlohmann::ordered_json to_json(const MultiGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

MultiGraph multigraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  }
  const auto& vertices = j.at("vertices");
  if (!vertices.is_number_integer() || vertices.get<long long>() < 1) {
    throw std::invalid_argument("\"vertices\" must be a positive integer");
  }
  MultiGraph g(static_cast<Vertex>(vertices.get<long long>()));
  if (!j.at("edges").is_array()) throw std::invalid_argument("\"edges\" must be an array");
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw std::invalid_argument("each edge must be a pair [u, v] of integers");
    }
    const long long u = pair[0].get<long long>();
    const long long v = pair[1].get<long long>();
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
      throw std::invalid_argument("edge endpoint out of range: [" + std::to_string(u) + ", " +
                                  std::to_string(v) + "]");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::optional<MultiGraph> named_graph(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view kind = name.substr(0, colon);
  std::optional<Vertex> arg;
  if (colon != std::string_view::npos) {
    arg = parse_count(name.substr(colon + 1));
    if (!arg) return std::nullopt;
  }
  if (kind == "complete" && arg && *arg >= 1) return complete_graph(*arg);
  if (kind == "cycle" && arg && *arg >= 3) return cycle_graph(*arg);
  if (kind == "path" && arg && *arg >= 1) return path_graph(*arg);
  if (kind == "banana") return banana_graph(arg.value_or(2));
  if (kind == "loop" && !arg) return MultiGraph(1, {{0, 0}});
  if (kind == "bridge" && !arg) return path_graph(2);
  return std::nullopt;
}

std::string describe(const MultiGraph& g) {
  std::ostringstream out;
  out << "V=" << g.vertex_count() << " E=[";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k > 0) out << ' ';
    out << g.edges()[k].u << '-' << g.edges()[k].v;
  }
  out << ']';
  return out.str();
}

}  // namespace parklc
