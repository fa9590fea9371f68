#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gbott/model.hpp"
#include "gbott/snf.hpp"

namespace gbott {

// Complete simplicial fan of the tower: one ray per facet of the base
// polytope, maximal cones omit exactly one ray per block.
struct Fan {
  Dims dims{std::vector<int>{1}};
  std::vector<std::vector<long long>> rays;     // indexed (i,l), l = 0..n_i
  std::vector<std::vector<int>> maximal_cones;  // ray indices, ascending

  int ray_index(int block, int l) const { return dims.offset(block) + block + l; }
};

inline Fan build_fan(const VectorMatrix& A) {
  const Dims& d = A.dims();
  Fan f;
  f.dims = d;
  for (int i = 0; i < d.k(); ++i) {
    std::vector<long long> neg(d.n(), 0);
    for (int j = 0; j < d.k(); ++j)
      for (int l = 0; l < d.part(j); ++l)
        if (A.a(i, j, l)) neg[d.offset(j) + l] = -1;
    f.rays.push_back(std::move(neg));
    for (int l = 1; l <= d.part(i); ++l) {
      std::vector<long long> e(d.n(), 0);
      e[d.offset(i) + l - 1] = 1;
      f.rays.push_back(std::move(e));
    }
  }
  std::vector<int> omit(d.k(), 0);  // omitted facet per block, 0..n_i
  while (true) {
    std::vector<int> cone;
    for (int i = 0; i < d.k(); ++i)
      for (int l = 0; l <= d.part(i); ++l)
        if (l != omit[i]) cone.push_back(f.ray_index(i, l));
    f.maximal_cones.push_back(std::move(cone));
    int i = d.k() - 1;
    while (i >= 0 && omit[i] == d.part(i)) omit[i--] = 0;
    if (i < 0) break;
    ++omit[i];
  }
  return f;
}

namespace detail {

// Fraction-free elimination; exact over arbitrary-precision integers.
inline BigInt bareiss_det(IntMatrix m) {
  const int n = m.rows();
  BigInt sign = 1, prev = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n && pivot < 0; ++r)
      if (m.at(r, c) != 0) pivot = r;
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        m.at(r, j) = (m.at(r, j) * m.at(c, c) - m.at(r, c) * m.at(c, j)) / prev;
      m.at(r, c) = 0;
    }
    prev = m.at(c, c);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace detail

// Every maximal cone must be a lattice basis.
inline bool is_smooth(const Fan& f) {
  const int n = static_cast<int>(f.rays.empty() ? 0 : f.rays[0].size());
  for (const auto& cone : f.maximal_cones) {
    if (static_cast<int>(cone.size()) != n) return false;
    IntMatrix m(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) m.at(r, c) = f.rays[cone[c]][r];
    const BigInt det = detail::bareiss_det(std::move(m));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

// Flag test on the underlying simplicial complex: search for a minimal
// non-face of size >= 3. Minimal non-faces here are full block ray sets, so
// subsets up to max block size + 1 are enough for completeness.
inline bool is_flag(const Fan& f) {
  const int v = static_cast<int>(f.rays.size());
  if (v > 64) throw std::invalid_argument("is_flag: too many rays");
  std::vector<uint64_t> cone_masks;
  for (const auto& cone : f.maximal_cones) {
    uint64_t mask = 0;
    for (int r : cone) mask |= uint64_t{1} << r;
    cone_masks.push_back(mask);
  }
  auto is_face = [&](uint64_t set) {
    for (uint64_t mask : cone_masks)
      if ((set & ~mask) == 0) return true;
    return false;
  };
  int bound = 2;
  for (int i = 0; i < f.dims.k(); ++i)
    bound = std::max(bound, f.dims.part(i) + 1);
  const auto search = [&](auto&& self, uint64_t set, int next, int size) -> bool {
    if (size >= 1 && !is_face(set)) {
      // a proper superset of a non-face is never a minimal non-face: stop here
      if (size < 3) return false;
      bool minimal = true;
      for (uint64_t sub = set; sub && minimal; sub &= sub - 1)
        minimal = is_face(set & ~(sub & -sub));
      return minimal;
    }
    if (size == bound) return false;
    for (int r = next; r < v; ++r)
      if (self(self, set | (uint64_t{1} << r), r + 1, size + 1)) return true;
    return false;
  };
  return !search(search, 0, 0, 0);
}

}  // namespace gbott
