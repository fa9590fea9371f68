#pragma once
// Exhaustive enumeration of normalized defining matrices for a fixed
// dimension vector, classification counts over that space, and a canonical
// form under simultaneous block-permutation conjugation.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gbott/fungroup.hpp"
#include "gbott/model.hpp"
#include "gbott/sw.hpp"

namespace gbott {

// Free entries of the normalized form: the strict upper blocks.  Block q
// contributes one row of part(q) bits per block above it.
inline int census_bits(const Dims& d) {
  int bits = 0;
  for (int q = 0; q < d.k(); ++q) bits += q * d.part(q);
  return bits;
}

inline uint64_t census_size(const Dims& d) {
  const int bits = census_bits(d);
  if (bits >= 63) throw std::invalid_argument("census: space too large");
  return uint64_t(1) << bits;
}

// Matrices are ordered lexicographically by their free entries read in
// row-major order, so index bits are consumed most significant first.
inline VectorMatrix census_matrix(const Dims& d, uint64_t index) {
  const int bits = census_bits(d);
  VectorMatrix A(d);
  for (int r = 0; r < d.k(); ++r)
    for (int l = 0; l < d.part(r); ++l) A.set_a(r, r, l, 1);
  int bit = 0;
  for (int r = 0; r < d.k(); ++r)
    for (int q = r + 1; q < d.k(); ++q)
      for (int l = 0; l < d.part(q); ++l, ++bit)
        A.set_a(r, q, l, (index >> (bits - 1 - bit)) & 1);
  return A;
}

namespace detail {

// Comparison key realizing "lexicographically least": dimension vector
// first, then the row-major entry sequence.
inline std::pair<std::vector<int>, std::vector<std::vector<int>>> matrix_key(
    const VectorMatrix& A) {
  return {A.dims().parts(), A.row_lists()};
}

}  // namespace detail

// Least upper-triangular unipotent representative of the conjugation orbit.
// Conjugation permutes the dimension vector along with the blocks, so the
// canonical form of a matrix over dims (1,2) may live over dims (2,1).
inline VectorMatrix canonical_form(const VectorMatrix& A) {
  BlockPermutation sigma = BlockPermutation::identity(A.k());
  VectorMatrix best = A;
  auto best_key = detail::matrix_key(best);
  do {
    VectorMatrix B = conjugate(A, sigma);
    if (!B.is_normalized()) continue;
    auto key = detail::matrix_key(B);
    if (key < best_key) {
      best = std::move(B);
      best_key = std::move(key);
    }
  } while (std::next_permutation(sigma.order.begin(), sigma.order.end()));
  return best;
}

inline std::string canonical_key(const VectorMatrix& A) {
  VectorMatrix C = canonical_form(A);
  std::string out;
  for (int i = 0; i < C.k(); ++i) {
    if (i) out += ',';
    out += std::to_string(C.dims().part(i));
  }
  out += '|';
  for (int r = 0; r < C.k(); ++r) {
    if (r) out += ';';
    for (int c = 0; c < C.n(); ++c) out += char('0' + C.bit(r, c));
  }
  return out;
}

struct CensusCounts {
  long long total = 0;
  long long orientable = 0;
  long long spin = 0;
  long long abelian = 0;
  long long aspherical = 0;

  CensusCounts& operator+=(const CensusCounts& o) {
    total += o.total;
    orientable += o.orientable;
    spin += o.spin;
    abelian += o.abelian;
    aspherical += o.aspherical;
    return *this;
  }
  bool operator==(const CensusCounts&) const = default;
};

namespace detail {

// With dedupe set, a matrix is tallied only when it is the least member of
// its orbit within this enumeration, so each orbit counts once and chunked
// workers never need shared state.  Only conjugates with the same dimension
// vector compete: an orbit may straddle several dims orderings, and each
// census accounts for its own slice.
inline bool orbit_representative(const VectorMatrix& A) {
  BlockPermutation sigma = BlockPermutation::identity(A.k());
  const auto key = matrix_key(A);
  do {
    VectorMatrix B = conjugate(A, sigma);
    if (B.dims() == A.dims() && B.is_normalized() && matrix_key(B) < key)
      return false;
  } while (std::next_permutation(sigma.order.begin(), sigma.order.end()));
  return true;
}

inline CensusCounts classify_range(const Dims& d, uint64_t lo, uint64_t hi,
                                   bool dedupe) {
  CensusCounts c;
  for (uint64_t idx = lo; idx < hi; ++idx) {
    VectorMatrix A = census_matrix(d, idx);
    if (dedupe && !orbit_representative(A)) continue;
    ++c.total;
    const bool orientable = is_orientable(A);
    c.orientable += orientable;
    if (orientable) c.spin += is_spin(A);
    const GroupFlags flags = group_properties(A);
    c.abelian += flags.abelian;
    c.aspherical += flags.aspherical;
  }
  return c;
}

}  // namespace detail

// Aggregate counts over the whole enumeration.  `threads` <= 0 picks the
// hardware count; chunk results merge by addition, so the outcome does not
// depend on the split.
inline CensusCounts classify(const Dims& d, bool dedupe = false,
                             int threads = 0) {
  const uint64_t size = census_size(d);
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? static_cast<int>(hw) : 1;
  }
  const uint64_t min_chunk = 1024;
  uint64_t chunks = std::min<uint64_t>(threads, (size + min_chunk - 1) / min_chunk);
  if (chunks <= 1) return detail::classify_range(d, 0, size, dedupe);

  std::vector<CensusCounts> partial(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (uint64_t c = 0; c < chunks; ++c) {
    const uint64_t lo = size * c / chunks, hi = size * (c + 1) / chunks;
    workers.emplace_back([&, c, lo, hi] {
      partial[c] = detail::classify_range(d, lo, hi, dedupe);
    });
  }
  for (auto& w : workers) w.join();
  CensusCounts out;
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace gbott
