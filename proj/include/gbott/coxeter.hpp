#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "gbott/model.hpp"

namespace gbott {

// Reflection generator s_{block,facet}; facet 0 is the distinguished facet of
// the block, facets 1..n_i are the coordinate ones. Every letter squares to 1.
struct CoxeterLetter {
  int block = 0;
  int facet = 0;
  auto operator<=>(const CoxeterLetter&) const = default;
};

using CoxeterWord = std::vector<CoxeterLetter>;

// Two distinct letters fail to commute only inside a 1-dimensional block,
// whose two facets are disjoint.
inline bool commute(const Dims& d, const CoxeterLetter& a,
                    const CoxeterLetter& b) {
  if (a == b) return true;
  return a.block != b.block || d.part(a.block) >= 2;
}

inline std::vector<std::pair<CoxeterLetter, CoxeterLetter>> commutation_graph(
    const Dims& d) {
  std::vector<std::pair<CoxeterLetter, CoxeterLetter>> pairs;
  for (int i = 0; i < d.k(); ++i)
    if (d.part(i) == 1) pairs.push_back({{i, 0}, {i, 1}});
  return pairs;
}

// Shortest canonical form: delete letter pairs whose in-between letters all
// commute with them until none remain, then linearize to the lexicographically
// least word in the commutation class by always emitting the least letter
// whose first occurrence can be shuffled to the front.
inline CoxeterWord racg_reduce(const Dims& d, CoxeterWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t q = 1; q < w.size() && !changed; ++q)
      for (std::size_t p = q; p-- > 0 && !changed;) {
        if (!(w[p] == w[q])) continue;
        bool clear = true;
        for (std::size_t t = p + 1; t < q && clear; ++t)
          clear = commute(d, w[t], w[q]);
        if (clear) {
          w.erase(w.begin() + q);
          w.erase(w.begin() + p);
          changed = true;
        }
      }
  }

  CoxeterWord out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t pick = 0;  // position 0 is always movable
    for (std::size_t j = 1; j < w.size(); ++j) {
      bool front = true;
      for (std::size_t t = 0; t < j && front; ++t)
        front = commute(d, w[t], w[j]);
      if (front && w[j] < w[pick]) pick = j;
    }
    out.push_back(w[pick]);
    w.erase(w.begin() + pick);
  }
  return out;
}

// Translation part t_eps: one commuting involution per set coordinate bit,
// using only facets >= 1, in block-major order.
inline CoxeterWord t_epsilon(const Dims& d, uint64_t eps) {
  CoxeterWord w;
  for (int i = 0; i < d.k(); ++i)
    for (int l = 1; l <= d.part(i); ++l)
      if ((eps >> (d.offset(i) + l - 1)) & 1) w.push_back({i, l});
  return w;
}

// Coordinate shift data attached to a coset representative eps.
struct CosetShift {
  uint64_t eps = 0;

  uint64_t shifted_by_row(const VectorMatrix& A, int p) const {
    return eps ^ A.row_word(p);
  }
  uint64_t shifted_by_rows(const VectorMatrix& A, int p, int q) const {
    return eps ^ A.row_word(p) ^ A.row_word(q);
  }
};

}  // namespace gbott
