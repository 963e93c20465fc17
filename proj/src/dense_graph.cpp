#include "dense_graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace parklc::detail {

DenseGraph::DenseGraph(const MultiGraph& g) : DenseGraph(g.vertex_count()) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      m_[e.u * n_ + e.u] += 1;
    } else {
      add_mult(e.u, e.v, 1);
    }
  }
}

std::uint32_t DenseGraph::degree(Vertex v) const {
  std::uint32_t d = 0;
  for (Vertex j = 0; j < n_; ++j) {
    if (j != v) d += mult(v, j);
  }
  return d;
}

std::uint32_t DenseGraph::edge_count() const {
  std::uint32_t total = 0;
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i; j < n_; ++j) total += mult(i, j);
  }
  return total;
}

bool DenseGraph::connected_avoiding(Vertex from, Vertex to) const {
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < n_; ++w) {
      if (seen[w] || w == v || mult(v, w) == 0) continue;
      if ((v == from && w == to) || (v == to && w == from)) continue;
      if (w == to) return true;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return false;
}

bool DenseGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < n_; ++w) {
      if (!seen[w] && w != v && mult(v, w) > 0) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

DenseGraph DenseGraph::contracted(Vertex a, Vertex b) const {
  DenseGraph out(n_ - 1);
  auto relabel = [&](Vertex v) -> Vertex {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i; j < n_; ++j) {
      const std::uint32_t k = mult(i, j);
      if (k == 0) continue;
      const Vertex ri = relabel(i);
      const Vertex rj = relabel(j);
      if (ri == rj) {
        out.m_[ri * out.n_ + ri] += k;
      } else {
        out.add_mult(ri, rj, k);
      }
    }
  }
  return out;
}

DenseGraph DenseGraph::without_isolated() const {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) > 0 || mult(v, v) > 0) keep.push_back(v);
  }
  return permuted(keep);
}

DenseGraph DenseGraph::permuted(const std::vector<Vertex>& order) const {
  DenseGraph out(static_cast<Vertex>(order.size()));
  for (Vertex p = 0; p < out.n_; ++p) {
    for (Vertex q = 0; q < out.n_; ++q) out.m_[p * out.n_ + q] = mult(order[p], order[q]);
  }
  return out;
}

MultiGraph DenseGraph::to_multigraph() const {
  MultiGraph g(n_);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i; j < n_; ++j) {
      for (std::uint32_t k = 0; k < mult(i, j); ++k) g.add_edge(i, j);
    }
  }
  return g;
}

std::string CanonicalForm::key() const {
  std::string s;
  s.reserve(code.size() * 4);
  for (std::uint32_t c : code) {
    for (int shift = 0; shift < 32; shift += 8) s.push_back(static_cast<char>((c >> shift) & 0xff));
  }
  return s;
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const DenseGraph& g) : g_(g), n_(g.size()) {
    using Invariant = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    std::vector<Invariant> inv(n_);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint32_t distinct = 0;
      for (Vertex w = 0; w < n_; ++w) distinct += (w != v && g.mult(v, w) > 0);
      inv[v] = {g.degree(v), g.mult(v, v), distinct};
    }
    std::vector<Vertex> sorted(n_);
    std::iota(sorted.begin(), sorted.end(), Vertex{0});
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });
    class_of_vertex_.assign(n_, 0);
    class_at_position_.assign(n_, 0);
    std::uint32_t cls = 0;
    for (Vertex p = 0; p < n_; ++p) {
      if (p > 0 && inv[sorted[p]] != inv[sorted[p - 1]]) ++cls;
      class_of_vertex_[sorted[p]] = cls;
      class_at_position_[p] = cls;
    }
    const std::size_t code_len = static_cast<std::size_t>(n_) * (n_ + 1) / 2;
    cur_.assign(code_len, 0);
    perm_.assign(n_, 0);
    used_.assign(n_, false);
  }

  CanonicalForm run() {
    if (n_ > 0) descend(0, false);
    CanonicalForm out;
    out.order = best_perm_;
    out.code.reserve(best_.size() + 1);
    out.code.push_back(n_);
    out.code.insert(out.code.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  static std::size_t row_offset(Vertex d) { return static_cast<std::size_t>(d) * (d + 1) / 2; }

  // Returns true if the best encoding was replaced somewhere below this frame.
  bool descend(Vertex depth, bool tight) {
    bool updated = false;
    const std::size_t off = row_offset(depth);
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || class_of_vertex_[v] != class_at_position_[depth]) continue;
      cur_[off] = g_.mult(v, v);
      for (Vertex q = 0; q < depth; ++q) cur_[off + 1 + q] = g_.mult(v, perm_[q]);

      int cmp = -1;
      if (have_best_ && tight) {
        cmp = 0;
        for (std::size_t k = off; k <= off + depth && cmp == 0; ++k) {
          if (cur_[k] != best_[k]) cmp = cur_[k] < best_[k] ? -1 : 1;
        }
      }
      if (cmp > 0) continue;

      used_[v] = true;
      perm_[depth] = v;
      if (depth + 1 == n_) {
        if (!have_best_ || cmp < 0) {
          best_ = cur_;
          best_perm_ = perm_;
          have_best_ = true;
          updated = true;
          tight = true;
        }
      } else if (descend(depth + 1, cmp == 0)) {
        updated = true;
        tight = true;
      }
      used_[v] = false;
    }
    return updated;
  }

  const DenseGraph& g_;
  Vertex n_;
  std::vector<std::uint32_t> class_of_vertex_;
  std::vector<std::uint32_t> class_at_position_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
  std::vector<bool> used_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const DenseGraph& g) { return CanonicalSearch(g).run(); }

}  // namespace parklc::detail
