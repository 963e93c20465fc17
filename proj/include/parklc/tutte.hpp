#ifndef PARKLC_TUTTE_HPP
#define PARKLC_TUTTE_HPP

#include <cstddef>
#include <memory>

#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"

namespace parklc {

// Memoized deletion-contraction. Parallel edge classes are processed as a
// unit, loops are factored out as powers of y, and every minor with at most
// kCanonicalVertexCap vertices is relabeled canonically and cached by its
// isomorphism class. One engine may be shared across calls (and threads) to
// reuse its cache.
class TutteEngine {
 public:
  // `threads` bounds how many recursion branches run concurrently.
  explicit TutteEngine(unsigned threads = 1);
  ~TutteEngine();
  TutteEngine(const TutteEngine&) = delete;
  TutteEngine& operator=(const TutteEngine&) = delete;

  BivariatePolynomial compute(const MultiGraph& g);

  std::size_t cache_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Tutte polynomial of the graphic matroid M(g). Loops, parallel edges and
// disconnected inputs are accepted; an edgeless graph gives 1.
BivariatePolynomial tutte_delcon(const MultiGraph& g, unsigned threads = 1);

}  // namespace parklc

#endif  // PARKLC_TUTTE_HPP
