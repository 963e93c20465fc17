#include "parklc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

namespace parklc {

namespace {

// Rank of an edge set given as a bitmask (ground size <= 64). The union-find
// is rebuilt for every query.
std::size_t graphic_rank_bits(const MultiGraph& g, std::uint64_t mask) {
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t rank = 0;
  while (mask != 0) {
    const int k = std::countr_zero(mask);
    mask &= mask - 1;
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      ++rank;
    }
  }
  return rank;
}

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Signed expansion of (t - 1)^k as coefficients of t^0..t^k.
std::vector<Integer> shifted_power(std::size_t k) {
  std::vector<Integer> c(k + 1);
  Integer binom = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    // coefficient of t^i in (t - 1)^k is C(k, i) (-1)^(k - i)
    c[i] = ((k - i) % 2 == 0) ? binom : Integer(-binom);
    binom = binom * static_cast<unsigned long>(k - i) / static_cast<unsigned long>(i + 1);
  }
  return c;
}

}  // namespace

RankOracleMatroid::RankOracleMatroid(std::size_t ground_size, Kind kind)
    : ground_size_(ground_size), kind_(std::move(kind)) {}

RankOracleMatroid RankOracleMatroid::graphic(MultiGraph host) {
  const std::size_t ground = host.edge_count();
  RankOracleMatroid m(ground, std::move(host));
  m.full_rank_ = m.rank(EdgeSubset(ground).set());
  return m;
}

RankOracleMatroid RankOracleMatroid::dual(const RankOracleMatroid& inner) {
  RankOracleMatroid m(inner.ground_size(), Dual{std::make_shared<const RankOracleMatroid>(inner)});
  m.full_rank_ = inner.ground_size() - inner.full_rank();
  return m;
}

std::size_t RankOracleMatroid::rank(const EdgeSubset& s) const {
  if (s.size() != ground_size_) throw std::invalid_argument("subset size does not match ground set");
  if (const auto* g = std::get_if<MultiGraph>(&kind_)) return graphic_rank(*g, s);
  return dual_rank(*std::get<Dual>(kind_).inner, s);
}

std::string RankOracleMatroid::describe() const {
  if (const auto* g = std::get_if<MultiGraph>(&kind_)) return "M(" + parklc::describe(*g) + ")";
  return std::get<Dual>(kind_).inner->describe() + "^dual";
}

std::size_t graphic_rank(const MultiGraph& g, const EdgeSubset& s) {
  return g.vertex_count() - component_count(g, s);
}

std::size_t dual_rank(const RankOracleMatroid& m, const EdgeSubset& s) {
  return s.count() + m.rank(~s) - m.full_rank();
}

BivariatePolynomial tutte_by_rank_sum(const RankOracleMatroid& m, unsigned threads) {
  const std::size_t n = m.ground_size();
  if (n > kRankSumGroundCap) {
    throw RankSumCapExceeded("rank-sum Tutte polynomial is capped at " +
                             std::to_string(kRankSumGroundCap) + " ground elements (got " +
                             std::to_string(n) + "); use the deletion-contraction engine");
  }

  // Resolve the chain of dual wrappers down to the host graph once, so each
  // subset costs one union-find pass.
  std::vector<const RankOracleMatroid*> chain{&m};
  while (chain.back()->inner() != nullptr) chain.push_back(chain.back()->inner());
  const MultiGraph& host = *chain.back()->host();
  const std::uint64_t all = full_mask(n);
  auto rank_bits = [&](std::uint64_t mask) {
    // rank_{M*}(S) = |S| + rank_M(E \ S) - r_M, applied once per dual layer.
    std::ptrdiff_t offset = 0;
    for (std::size_t d = 0; d + 1 < chain.size(); ++d) {
      offset += std::popcount(mask) - static_cast<std::ptrdiff_t>(chain[d + 1]->full_rank());
      mask = ~mask & all;
    }
    return static_cast<std::size_t>(offset + static_cast<std::ptrdiff_t>(graphic_rank_bits(host, mask)));
  };

  const std::size_t r = m.full_rank();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(subsets, 64))));
  using Table = std::vector<std::uint64_t>;  // [corank][nullity]
  const std::size_t width = n + 1;
  std::vector<Table> partial(workers, Table((r + 1) * width, 0));

  auto work = [&](unsigned w) {
    const std::uint64_t lo = subsets * w / workers;
    const std::uint64_t hi = subsets * (w + 1) / workers;
    Table& t = partial[w];
    for (std::uint64_t s = lo; s < hi; ++s) {
      const std::size_t rk = rank_bits(s);
      const std::size_t size = static_cast<std::size_t>(std::popcount(s));
      ++t[(r - rk) * width + (size - rk)];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Table counts((r + 1) * width, 0);
  for (const Table& t : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += t[k];
  }

  BivariatePolynomial out;
  for (std::size_t a = 0; a <= r; ++a) {
    const auto xs = shifted_power(a);
    for (std::size_t b = 0; b < width; ++b) {
      const std::uint64_t count = counts[a * width + b];
      if (count == 0) continue;
      const auto ys = shifted_power(b);
      const Integer weight(std::to_string(count));
      for (std::size_t i = 0; i <= a; ++i) {
        for (std::size_t j = 0; j <= b; ++j) {
          out.add_term(static_cast<Exponent>(i), static_cast<Exponent>(j), weight * xs[i] * ys[j]);
        }
      }
    }
  }
  return out;
}

}  // namespace parklc
