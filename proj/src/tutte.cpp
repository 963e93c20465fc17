#include "parklc/tutte.hpp"

#include <future>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "dense_graph.hpp"

namespace parklc {

namespace {

using detail::DenseGraph;

// 1 + y + ... + y^(k-1)
BivariatePolynomial y_geometric(std::uint32_t k) {
  BivariatePolynomial p;
  for (std::uint32_t j = 0; j < k; ++j) p.add_term(0, j, 1);
  return p;
}

// x + y + ... + y^(k-1): k parallel copies of a bridge.
BivariatePolynomial bridge_class_factor(std::uint32_t k) {
  BivariatePolynomial p = BivariatePolynomial::monomial(1, 0);
  for (std::uint32_t j = 1; j < k; ++j) p.add_term(0, j, 1);
  return p;
}

DenseGraph without_class(const DenseGraph& g, Vertex u, Vertex v) {
  DenseGraph out = g;
  out.set_mult(u, v, 0);
  return out;
}

// Contract every u–v edge; the loops this creates are accounted for by the caller.
DenseGraph contract_class(const DenseGraph& g, Vertex u, Vertex v) {
  DenseGraph out = g.contracted(std::min(u, v), std::max(u, v));
  const Vertex merged = std::min(u, v);
  out.set_mult(merged, merged, 0);
  return out;
}

}  // namespace

struct TutteEngine::Impl {
  explicit Impl(unsigned threads) : threads(threads == 0 ? 1 : threads) {
    // Branches are forked while depth < spawn_depth, giving about `threads` leaves.
    while ((1u << spawn_depth) < this->threads) ++spawn_depth;
  }

  unsigned threads;
  unsigned spawn_depth = 0;
  mutable std::shared_mutex mutex;
  std::unordered_map<std::string, BivariatePolynomial> cache;

  std::optional<BivariatePolynomial> lookup(const std::string& key) const {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) return std::nullopt;
    return it->second;
  }

  void store(std::string key, const BivariatePolynomial& value) {
    std::unique_lock lock(mutex);
    cache.try_emplace(std::move(key), value);
  }

  // g is connected and loopless.
  BivariatePolynomial solve(DenseGraph g, unsigned depth) {
    if (g.size() <= 1) return BivariatePolynomial::constant(1);

    std::optional<std::string> key;
    if (g.size() <= kCanonicalVertexCap) {
      const detail::CanonicalForm form = detail::canonical_form(g);
      g = g.permuted(form.order);
      key = form.key();
      if (auto hit = lookup(*key)) return *hit;
    }

    BivariatePolynomial result = expand(g, depth);
    if (key) store(std::move(*key), result);
    return result;
  }

  BivariatePolynomial expand(const DenseGraph& g, unsigned depth) {
    // Branch on the first neighbour class of a minimum-degree vertex. In
    // canonical labeling vertex 0 already has minimum degree.
    Vertex u = 0;
    for (Vertex v = 1; v < g.size(); ++v) {
      if (g.degree(v) < g.degree(u)) u = v;
    }
    Vertex w = 0;
    while (w == u || g.mult(u, w) == 0) ++w;
    const std::uint32_t k = g.mult(u, w);

    if (!g.connected_avoiding(u, w)) {
      return bridge_class_factor(k) * solve(contract_class(g, u, w), depth + 1);
    }

    DenseGraph deleted = without_class(g, u, w);
    DenseGraph contracted = contract_class(g, u, w);
    if (depth < spawn_depth) {
      auto pending = std::async(std::launch::async, [this, d = std::move(deleted), depth]() mutable {
        return solve(std::move(d), depth + 1);
      });
      BivariatePolynomial c = y_geometric(k) * solve(std::move(contracted), depth + 1);
      return pending.get() + c;
    }
    BivariatePolynomial del = solve(std::move(deleted), depth + 1);
    return del + y_geometric(k) * solve(std::move(contracted), depth + 1);
  }
};

TutteEngine::TutteEngine(unsigned threads) : impl_(std::make_unique<Impl>(threads)) {}
TutteEngine::~TutteEngine() = default;

BivariatePolynomial TutteEngine::compute(const MultiGraph& g) {
  BivariatePolynomial result = BivariatePolynomial::monomial(0, static_cast<Exponent>(g.loop_count()));
  for (const MultiGraph& component : connected_components(g)) {
    DenseGraph dense(component);
    for (Vertex v = 0; v < dense.size(); ++v) dense.set_mult(v, v, 0);
    result = result * impl_->solve(std::move(dense), 0);
  }
  return result;
}

std::size_t TutteEngine::cache_size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->cache.size();
}

BivariatePolynomial tutte_delcon(const MultiGraph& g, unsigned threads) {
  return TutteEngine(threads).compute(g);
}

}  // namespace parklc
