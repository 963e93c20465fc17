#include "parklc/enumerators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "parallel.hpp"

namespace parklc {

namespace {

std::uint64_t power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

IntPolynomial from_counts(const std::vector<std::vector<std::uint64_t>>& partial) {
  IntPolynomial out;
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0) out.add_term(static_cast<Exponent>(k), Integer(std::to_string(counts[k])));
    }
  }
  return out;
}

}  // namespace

LabeledTree::LabeledTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  const Vertex n = vertex_count();
  if (n == 0) throw std::invalid_argument("a labeled tree needs at least the root");
  parent_[0] = 0;
  // state: 0 unvisited, 1 on the current walk, 2 known to reach the root
  std::vector<unsigned char> state(n, 0);
  state[0] = 2;
  for (Vertex start = 1; start < n; ++start) {
    std::vector<Vertex> walk;
    Vertex v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      if (parent_[v] >= n) throw std::invalid_argument("parent label out of range");
      v = parent_[v];
    }
    if (state[v] == 1) throw std::invalid_argument("parent map contains a cycle");
    for (Vertex w : walk) state[w] = 2;
  }
}

std::vector<Edge> LabeledTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent_.size() - 1);
  for (Vertex v = 1; v < vertex_count(); ++v) {
    out.push_back({std::min(v, parent_[v]), std::max(v, parent_[v])});
  }
  return out;
}

MultiGraph LabeledTree::to_graph() const { return MultiGraph(vertex_count(), edges()); }

LabeledTree prufer_decode(std::span<const Vertex> sequence, Vertex vertex_count) {
  if (vertex_count < 2) throw std::invalid_argument("Prüfer decoding needs at least 2 vertices");
  if (sequence.size() + 2 != vertex_count) {
    throw std::invalid_argument("Prüfer sequence must have vertex_count - 2 labels");
  }
  std::vector<std::uint32_t> degree(vertex_count, 1);
  for (Vertex s : sequence) {
    if (s >= vertex_count) throw std::invalid_argument("Prüfer label out of range");
    ++degree[s];
  }

  std::vector<std::vector<Vertex>> adjacent(vertex_count);
  auto link = [&](Vertex a, Vertex b) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  };
  for (Vertex s : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    link(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  link(a, b);

  // Orient toward root 0.
  std::vector<Vertex> parent(vertex_count, 0);
  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacent[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      stack.push_back(w);
    }
  }
  return LabeledTree(std::move(parent));
}

std::size_t inversion_count(const LabeledTree& t) {
  std::size_t inversions = 0;
  for (Vertex i = 1; i < t.vertex_count(); ++i) {
    for (Vertex j = t.parent(i); j != 0; j = t.parent(j)) inversions += (j > i);
  }
  return inversions;
}

IntPolynomial inversion_enumerator(Vertex n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("inversion_enumerator needs n >= 1");
  if (n == 1) return IntPolynomial::constant(1);
  if (n > kTreeVertexCap) {
    throw CapExceeded("tree enumeration is capped at " + std::to_string(kTreeVertexCap) +
                      " vertices (got " + std::to_string(n) + ")");
  }
  const unsigned length = n - 2;
  const std::uint64_t total = power(n, length);
  const std::size_t max_inv = static_cast<std::size_t>(n) * n;
  const unsigned workers = detail::worker_count(total, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(max_inv + 1, 0));

  detail::for_each_chunk(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Vertex> seq(length);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned k = length; k-- > 0;) {
        seq[k] = static_cast<Vertex>(rest % n);
        rest /= n;
      }
      ++partial[w][inversion_count(prufer_decode(seq, n))];
    }
  });
  return from_counts(partial);
}

IntPolynomial connected_edge_enumerator(Vertex n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("connected_edge_enumerator needs n >= 1");
  if (n > kConnectedVertexCap) {
    throw CapExceeded("connected-graph enumeration is capped at " +
                      std::to_string(kConnectedVertexCap) + " vertices (got " + std::to_string(n) +
                      ")");
  }
  const MultiGraph kn = complete_graph(n);
  const std::size_t m = kn.edge_count();
  const std::uint64_t total = std::uint64_t{1} << m;
  const unsigned workers = detail::worker_count(total, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(m + 1, 0));

  detail::for_each_chunk(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Vertex> parent(n);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::iota(parent.begin(), parent.end(), Vertex{0});
      Vertex components = n;
      for (std::size_t k = 0; k < m; ++k) {
        if (!(mask >> k & 1u)) continue;
        const Vertex a = find(kn.edges()[k].u);
        const Vertex b = find(kn.edges()[k].v);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          --components;
        }
      }
      if (components == 1) ++partial[w][static_cast<std::size_t>(std::popcount(mask))];
    }
  });
  return from_counts(partial);
}

}  // namespace parklc
