#ifndef PARKLC_MATROID_HPP
#define PARKLC_MATROID_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

#include "parklc/errors.hpp"
#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"

namespace parklc {

// Matroid given by its rank function: either the graphic matroid of a
// multigraph (ground set = edge indices) or the dual of another such matroid.
class RankOracleMatroid {
 public:
  static RankOracleMatroid graphic(MultiGraph host);
  static RankOracleMatroid dual(const RankOracleMatroid& inner);

  std::size_t ground_size() const { return ground_size_; }
  // Rank of the whole ground set.
  std::size_t full_rank() const { return full_rank_; }
  std::size_t rank(const EdgeSubset& s) const;

  bool is_dual() const { return std::holds_alternative<Dual>(kind_); }
  // Host graph of a graphic matroid, nullptr for a dual.
  const MultiGraph* host() const { return std::get_if<MultiGraph>(&kind_); }
  // Wrapped matroid of a dual, nullptr for a graphic matroid.
  const RankOracleMatroid* inner() const {
    const auto* d = std::get_if<Dual>(&kind_);
    return d ? d->inner.get() : nullptr;
  }
  std::string describe() const;

 private:
  struct Dual {
    std::shared_ptr<const RankOracleMatroid> inner;
  };
  using Kind = std::variant<MultiGraph, Dual>;

  RankOracleMatroid(std::size_t ground_size, Kind kind);

  std::size_t ground_size_;
  Kind kind_;
  std::size_t full_rank_ = 0;
};

// vertex_count - component_count(g, s): the size of a spanning forest of s.
std::size_t graphic_rank(const MultiGraph& g, const EdgeSubset& s);

// |S| + rank_M(E \ S) - r_M.
std::size_t dual_rank(const RankOracleMatroid& m, const EdgeSubset& s);

inline constexpr std::size_t kRankSumGroundCap = 22;

struct RankSumCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

// Sum over all S ⊆ E of (x-1)^(r_M - rank S) (y-1)^(|S| - rank S). The subset
// range may be split across `threads` workers; the result does not depend on
// the split. Throws RankSumCapExceeded above kRankSumGroundCap.
BivariatePolynomial tutte_by_rank_sum(const RankOracleMatroid& m, unsigned threads = 1);

}  // namespace parklc

#endif  // PARKLC_MATROID_HPP
