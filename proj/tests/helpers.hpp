#pragma once
// Shared helpers for the test suite.  Enumeration here is deliberately
// independent of the library's census module so the two can check each
// other.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gbott/model.hpp"

namespace testutil {

using gbott::Dims;
using gbott::VectorMatrix;

// Every GF(2) matrix of the given shape, indexed by a flat bit mask.
inline VectorMatrix matrix_from_mask(const Dims& d, uint64_t mask) {
  VectorMatrix A(d);
  const uint64_t row_mask = (uint64_t(1) << d.n()) - 1;
  for (int r = 0; r < d.k(); ++r)
    A.set_row_word(r, (mask >> (r * d.n())) & row_mask);
  return A;
}

inline uint64_t full_space_size(const Dims& d) {
  return uint64_t(1) << (d.k() * d.n());
}

// All ordered tuples of positive integers with the given sum.
inline std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

inline std::vector<std::vector<int>> compositions_up_to(int max_total) {
  std::vector<std::vector<int>> out;
  for (int t = 1; t <= max_total; ++t)
    for (auto& c : compositions(t)) out.push_back(c);
  return out;
}

// Number of unipotent upper-triangular matrices: one free bit per entry of
// every strict upper block.
inline int free_bit_count(const Dims& d) {
  int bits = 0;
  for (int r = 0; r < d.k(); ++r)
    for (int q = r + 1; q < d.k(); ++q) bits += d.part(q);
  return bits;
}

inline uint64_t unipotent_count(const Dims& d) {
  return uint64_t(1) << free_bit_count(d);
}

// index's bits fill the strict upper blocks in row-major scan order
// (low bit first); the diagonal blocks are all ones.
inline VectorMatrix unipotent_from_index(const Dims& d, uint64_t index) {
  VectorMatrix A(d);
  for (int r = 0; r < d.k(); ++r)
    for (int l = 0; l < d.part(r); ++l) A.set_a(r, r, l, 1);
  int bit = 0;
  for (int r = 0; r < d.k(); ++r)
    for (int q = r + 1; q < d.k(); ++q)
      for (int l = 0; l < d.part(q); ++l)
        A.set_a(r, q, l, (index >> bit++) & 1);
  return A;
}

inline VectorMatrix random_unipotent(const Dims& d, std::mt19937& rng) {
  const int bits = free_bit_count(d);
  uint64_t index = 0;
  for (int i = 0; i < bits; ++i) index |= uint64_t(rng() & 1) << i;
  return unipotent_from_index(d, index);
}

inline gbott::BlockPermutation random_permutation(int k, std::mt19937& rng) {
  gbott::BlockPermutation s = gbott::BlockPermutation::identity(k);
  std::shuffle(s.order.begin(), s.order.end(), rng);
  return s;
}

}  // namespace testutil
