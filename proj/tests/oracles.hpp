#ifndef PARKLC_TESTS_ORACLES_HPP
#define PARKLC_TESTS_ORACLES_HPP

// Test-only reference computations. Each one follows a definition directly
// and shares no code path with the library routine it is compared against.

#include <random>
#include <vector>

#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"

namespace parklc::oracle {

// Sum enumerator of parking functions: every sequence in {1..n}^n, kept when
// its sorted form satisfies b_i <= i.
IntPolynomial parking_by_sorting(unsigned n);

// Tree inversion enumerator: every (n-1)-edge subset of K_n that forms a tree,
// rooted at 0 by BFS, inversions counted along explicit root paths.
IntPolynomial inversions_by_edge_subsets(Vertex n);

// C_n(x) from the recurrence
//   (1+x)^C(n,2) = sum_k C(n-1, k-1) C_k(x) (1+x)^C(n-k,2).
IntPolynomial connected_by_recurrence(Vertex n);

// G-parking enumerator straight from the subset definition over the box
// [1, |E| + 1]^n, computing d_I(i) from the edge list each time.
IntPolynomial gparking_by_definition(const MultiGraph& g);

// Number of spanning trees via the matrix-tree theorem (exact Bareiss
// elimination on the reduced Laplacian). Loops are ignored.
Integer spanning_trees_kirchhoff(const MultiGraph& g);

// Random multigraph on n vertices with m edges; loops only if allowed. A single
// vertex without loops stays edgeless.
MultiGraph random_multigraph(std::mt19937& rng, Vertex n, std::size_t m, bool allow_loops);

// Random connected loopless multigraph: a random spanning tree plus extras.
MultiGraph random_connected(std::mt19937& rng, Vertex n, std::size_t extra_edges);

// Relabels vertices by a random permutation and shuffles the edge order.
MultiGraph random_relabel(std::mt19937& rng, const MultiGraph& g);

IntPolynomial random_polynomial(std::mt19937& rng, Exponent max_degree, long max_abs);

}  // namespace parklc::oracle

#endif  // PARKLC_TESTS_ORACLES_HPP
