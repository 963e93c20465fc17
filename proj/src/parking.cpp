#include "parklc/parking.hpp"

#include <algorithm>
#include <string>

#include "dense_graph.hpp"
#include "parallel.hpp"

namespace parklc {

namespace {

void require_positive(std::span<const Entry> entries) {
  for (Entry a : entries) {
    if (a < 1) throw std::invalid_argument("entries must be positive integers, got " + std::to_string(a));
  }
}

// Checks the preconditions shared by the G-parking operations and returns the
// multiplicity matrix.
detail::DenseGraph gparking_host(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("G-parking functions need a root vertex");
  if (g.has_loops()) throw std::invalid_argument("G-parking functions need a loopless graph");
  if (!g.is_connected()) throw std::invalid_argument("G-parking functions need a connected graph");
  if (g.vertex_count() - 1 > kGParkingVertexCap) {
    throw CapExceeded("G-parking subset check is capped at " + std::to_string(kGParkingVertexCap) +
                      " non-root vertices");
  }
  return detail::DenseGraph(g);
}

// Bit k of a subset mask stands for vertex k + 1.
bool gparking_mask_check(const detail::DenseGraph& g, std::span<const Entry> a) {
  const Vertex n = g.size() - 1;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    bool witnessed = false;
    for (Vertex k = 0; k < n && !witnessed; ++k) {
      if (!(mask >> k & 1u)) continue;
      const Vertex i = k + 1;
      std::int64_t out = g.mult(i, 0);
      for (Vertex m = 0; m < n; ++m) {
        if (!(mask >> m & 1u)) out += g.mult(i, m + 1);
      }
      witnessed = a[k] <= out;
    }
    if (!witnessed) return false;
  }
  return true;
}

// Writes the mixed-radix digits of `index` into digits (digit k ranges over [1, radix[k]]).
void decode_index(std::uint64_t index, std::span<const std::uint64_t> radix, std::span<Entry> digits) {
  for (std::size_t k = radix.size(); k-- > 0;) {
    digits[k] = static_cast<Entry>(index % radix[k]) + 1;
    index /= radix[k];
  }
}

void advance_digits(std::span<const std::uint64_t> radix, std::span<Entry> digits) {
  for (std::size_t k = radix.size(); k-- > 0;) {
    if (static_cast<std::uint64_t>(digits[k]) < radix[k]) {
      ++digits[k];
      return;
    }
    digits[k] = 1;
  }
}

bool parking_by_counts(std::span<const Entry> a, std::vector<unsigned>& count) {
  const std::size_t n = a.size();
  std::fill(count.begin(), count.end(), 0u);
  for (Entry v : a) {
    if (static_cast<std::size_t>(v) > n) return false;
    ++count[static_cast<std::size_t>(v)];
  }
  // At least i entries must be <= i.
  unsigned seen = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    seen += count[i];
    if (seen < i) return false;
  }
  return true;
}

IntPolynomial from_counts(const std::vector<std::vector<std::uint64_t>>& partial) {
  IntPolynomial out;
  for (const auto& counts : partial) {
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] != 0) out.add_term(static_cast<Exponent>(s), Integer(std::to_string(counts[s])));
    }
  }
  return out;
}

}  // namespace

bool is_parking_function(std::span<const Entry> entries) {
  require_positive(entries);
  std::vector<Entry> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<Entry>(i + 1)) return false;
  }
  return true;
}

std::int64_t sum_statistic(std::span<const Entry> entries) {
  std::int64_t total = 0;
  for (Entry a : entries) total += a;
  return total;
}

IntPolynomial pf_sum_enumerator(unsigned n, unsigned threads) {
  if (n > kParkingLengthCap) {
    throw CapExceeded("parking-function enumeration is capped at n = " +
                      std::to_string(kParkingLengthCap) + " (got " + std::to_string(n) + ")");
  }
  if (n == 0) return IntPolynomial::constant(1);

  std::uint64_t total = 1;
  for (unsigned k = 0; k < n; ++k) total *= n;
  const std::vector<std::uint64_t> radix(n, n);
  const std::size_t max_sum = static_cast<std::size_t>(n) * n;
  const unsigned workers = detail::worker_count(total, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(max_sum + 1, 0));

  detail::for_each_chunk(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Entry> a(n);
    std::vector<unsigned> count(n + 1);
    auto& out = partial[w];
    if (lo == hi) return;
    decode_index(lo, radix, a);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (parking_by_counts(a, count)) ++out[static_cast<std::size_t>(sum_statistic(a))];
      advance_digits(radix, a);
    }
  });
  return from_counts(partial);
}

std::vector<std::vector<Entry>> list_parking_functions(unsigned n) {
  if (n > kParkingLengthCap) throw CapExceeded("parking-function listing is capped at n = 8");
  std::vector<std::vector<Entry>> out;
  if (n == 0) return {{}};
  std::uint64_t total = 1;
  for (unsigned k = 0; k < n; ++k) total *= n;
  const std::vector<std::uint64_t> radix(n, n);
  std::vector<Entry> a(n, 1);
  std::vector<unsigned> count(n + 1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (parking_by_counts(a, count)) out.push_back(a);
    advance_digits(radix, a);
  }
  return out;
}

std::size_t d_out(const MultiGraph& g, std::span<const Vertex> subset, Vertex i) {
  if (g.has_loops()) throw std::invalid_argument("d_out needs a loopless graph");
  if (!g.is_connected()) throw std::invalid_argument("d_out needs a connected graph");
  if (subset.empty()) throw std::invalid_argument("d_out needs a nonempty vertex subset");
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex v : subset) {
    if (v == 0) throw std::invalid_argument("the root vertex 0 cannot be in I");
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex outside the graph");
    if (inside[v]) throw std::invalid_argument("duplicate vertex in I");
    inside[v] = true;
  }
  if (i >= g.vertex_count() || !inside[i]) throw std::invalid_argument("i must belong to I");
  std::size_t out = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == i && !inside[e.v]) ++out;
    if (e.v == i && !inside[e.u]) ++out;
  }
  return out;
}

bool is_gparking(const MultiGraph& g, std::span<const Entry> entries) {
  const detail::DenseGraph dense = gparking_host(g);
  if (entries.size() + 1 != g.vertex_count()) {
    throw std::invalid_argument("a G-parking sequence has one entry per non-root vertex");
  }
  require_positive(entries);
  return gparking_mask_check(dense, entries);
}

namespace {

struct GParkingSpace {
  detail::DenseGraph dense;
  std::vector<std::uint64_t> radix;  // deg(i) for i = 1..n
  std::uint64_t total = 1;
  std::size_t max_sum = 0;
};

GParkingSpace gparking_space(const MultiGraph& g) {
  GParkingSpace space{gparking_host(g), {}, 1, 0};
  for (Vertex i = 1; i < g.vertex_count(); ++i) {
    const std::uint64_t deg = g.degree(i);
    space.radix.push_back(deg);
    space.max_sum += deg;
    space.total *= deg;
    if (space.total > kGParkingSearchCap) {
      throw CapExceeded("G-parking search space exceeds " + std::to_string(kGParkingSearchCap) +
                        " candidates");
    }
  }
  return space;
}

}  // namespace

IntPolynomial gpf_sum_enumerator(const MultiGraph& g, unsigned threads) {
  const GParkingSpace space = gparking_space(g);
  const std::size_t n = space.radix.size();
  if (n == 0) return IntPolynomial::constant(1);

  const unsigned workers = detail::worker_count(space.total, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(space.max_sum + 1, 0));
  detail::for_each_chunk(space.total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    if (lo == hi) return;
    std::vector<Entry> a(n);
    decode_index(lo, space.radix, a);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (gparking_mask_check(space.dense, a)) ++partial[w][static_cast<std::size_t>(sum_statistic(a))];
      advance_digits(space.radix, a);
    }
  });
  return from_counts(partial);
}

std::vector<std::vector<Entry>> list_gparking(const MultiGraph& g) {
  const GParkingSpace space = gparking_space(g);
  const std::size_t n = space.radix.size();
  if (n == 0) return {{}};
  std::vector<std::vector<Entry>> out;
  std::vector<Entry> a(n, 1);
  for (std::uint64_t idx = 0; idx < space.total; ++idx) {
    if (gparking_mask_check(space.dense, a)) out.push_back(a);
    advance_digits(space.radix, a);
  }
  return out;
}

}  // namespace parklc
