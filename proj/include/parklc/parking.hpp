#ifndef PARKLC_PARKING_HPP
#define PARKLC_PARKING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "parklc/errors.hpp"
#include "parklc/multigraph.hpp"
#include "parklc/polynomial.hpp"

namespace parklc {

// Parking-function entries are positive integers (1-based convention). The
// 0-based convention found elsewhere differs by subtracting 1 from every entry.
using Entry = std::int64_t;

// Sorted entries b_1 <= ... <= b_n satisfy b_i <= i. The empty sequence is a
// parking function. Throws std::invalid_argument on an entry below 1.
bool is_parking_function(std::span<const Entry> entries);

std::int64_t sum_statistic(std::span<const Entry> entries);

inline constexpr unsigned kParkingLengthCap = 8;

// P_n(x) = sum of x^(a_1 + ... + a_n) over parking functions of length n,
// found by filtering {1..n}^n. P_0 = 1.
IntPolynomial pf_sum_enumerator(unsigned n, unsigned threads = 1);

// Number of edges from i to vertices outside I. G must be loopless and
// connected; I must be nonempty, avoid vertex 0 and contain i.
std::size_t d_out(const MultiGraph& g, std::span<const Vertex> subset, Vertex i);

inline constexpr unsigned kGParkingVertexCap = 20;
inline constexpr std::uint64_t kGParkingSearchCap = 10'000'000;

// entries[k] is the value at vertex k + 1. True iff every nonempty
// I ⊆ {1..n} has some i with a_i <= d_out(G, I, i).
bool is_gparking(const MultiGraph& g, std::span<const Entry> entries);

// P_G(x) graded by entry sum. The search runs over the box
// a_i ∈ [1, deg(i)], which contains every G-parking function.
IntPolynomial gpf_sum_enumerator(const MultiGraph& g, unsigned threads = 1);

// Every sequence counted by the enumerators, in lexicographic order.
// Single-threaded; meant for small instances.
std::vector<std::vector<Entry>> list_parking_functions(unsigned n);
std::vector<std::vector<Entry>> list_gparking(const MultiGraph& g);

}  // namespace parklc

#endif  // PARKLC_PARKING_HPP
