#pragma once
// Defining data of a generalized real Bott manifold: a k x n block matrix
// over GF(2) whose rows are the nonstandard characteristic vectors over a
// product of k simplices with dimensions n_1..n_k (n = sum n_i).  Entry
// a(j, i, l) is the coefficient of basis vector e_{(i,l)} in row j; all
// indices here are 0-based, so l runs over 0..n_i-1 within block i.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbott/errors.hpp"
#include "gbott/gf2.hpp"

namespace gbott {

class Dims {
 public:
  explicit Dims(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw std::invalid_argument("dims: need at least one block");
    int off = 0;
    offsets_.reserve(parts_.size() + 1);
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("dims: block sizes must be >= 1");
      offsets_.push_back(off);
      off += p;
    }
    offsets_.push_back(off);
    if (off > 63)
      throw std::invalid_argument("dims: total dimension above 63 unsupported");
  }

  int k() const { return static_cast<int>(parts_.size()); }
  int n() const { return offsets_.back(); }
  int part(int i) const { return parts_[i]; }
  int offset(int i) const { return offsets_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  bool operator==(const Dims&) const = default;

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
};

class VectorMatrix {
 public:
  explicit VectorMatrix(Dims dims) : dims_(std::move(dims)), rows_(dims_.k(), 0) {}

  static VectorMatrix from_rows(Dims dims, const std::vector<std::vector<int>>& rows) {
    VectorMatrix m(std::move(dims));
    if (static_cast<int>(rows.size()) != m.k())
      throw std::invalid_argument("matrix: row count must equal block count");
    for (int r = 0; r < m.k(); ++r) {
      if (static_cast<int>(rows[r].size()) != m.n())
        throw std::invalid_argument("matrix: row length must equal total dimension");
      for (int c = 0; c < m.n(); ++c) {
        if (rows[r][c] != 0 && rows[r][c] != 1)
          throw std::invalid_argument("matrix: entries must be 0 or 1");
        m.set_bit(r, c, rows[r][c]);
      }
    }
    return m;
  }

  const Dims& dims() const { return dims_; }
  int k() const { return dims_.k(); }
  int n() const { return dims_.n(); }

  int bit(int row, int col) const { return (rows_[row] >> col) & 1; }
  void set_bit(int row, int col, int v) {
    const uint64_t m = uint64_t(1) << col;
    rows_[row] = v ? (rows_[row] | m) : (rows_[row] & ~m);
  }

  int a(int row, int block, int col) const {
    return bit(row, dims_.offset(block) + col);
  }
  void set_a(int row, int block, int col, int v) {
    set_bit(row, dims_.offset(block) + col, v);
  }

  uint64_t row_word(int row) const { return rows_[row]; }
  void set_row_word(int row, uint64_t w) { rows_[row] = w; }

  uint64_t block_word(int row, int block) const {
    const uint64_t mask = (uint64_t(1) << dims_.part(block)) - 1;
    return (rows_[row] >> dims_.offset(block)) & mask;
  }
  bool block_nonzero(int row, int block) const { return block_word(row, block) != 0; }

  int row_weight(int row) const { return std::popcount(rows_[row]); }

  // Upper-triangular with every diagonal block all ones.
  bool is_normalized() const {
    for (int j = 0; j < k(); ++j) {
      const uint64_t diag = (uint64_t(1) << dims_.part(j)) - 1;
      if (block_word(j, j) != diag) return false;
      for (int i = 0; i < j; ++i)
        if (block_nonzero(j, i)) return false;
    }
    return true;
  }

  std::vector<std::vector<int>> row_lists() const {
    std::vector<std::vector<int>> out(k(), std::vector<int>(n()));
    for (int r = 0; r < k(); ++r)
      for (int c = 0; c < n(); ++c) out[r][c] = bit(r, c);
    return out;
  }

  bool operator==(const VectorMatrix&) const = default;

 private:
  Dims dims_;
  std::vector<uint64_t> rows_;
};

// k x k square submatrix taking column choice[i] of block i.
inline Gf2Matrix submatrix(const VectorMatrix& A, const std::vector<int>& choice) {
  const int k = A.k();
  Gf2Matrix m(k, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) m.set(j, i, A.a(j, i, choice[i]));
  return m;
}

enum class ValidateMethod { minors, vertices };

struct MinorWitness {
  std::vector<int> choice;  // column picked inside each block
  std::vector<int> rows;    // principal index subset
};

namespace detail {

// Packed rows of the submatrix for one column choice: bit i of word j is
// a(j, i, choice[i]).
inline void submatrix_words(const VectorMatrix& A, const std::vector<int>& choice,
                            uint64_t* w) {
  const int k = A.k();
  for (int j = 0; j < k; ++j) {
    uint64_t row = 0;
    for (int i = 0; i < k; ++i)
      row |= uint64_t(A.a(j, i, choice[i])) << i;
    w[j] = row;
  }
}

inline int principal_det(const uint64_t* w, const std::vector<int>& rows) {
  const int s = static_cast<int>(rows.size());
  uint64_t sub[64];
  for (int t = 0; t < s; ++t) {
    uint64_t packed = 0;
    for (int u = 0; u < s; ++u)
      packed |= ((w[rows[t]] >> rows[u]) & 1u) << u;
    sub[t] = packed;
  }
  return gf2_det_words(sub, s);
}

template <typename Fn>
inline bool for_each_subset_by_size(int k, Fn&& fn) {
  std::vector<int> idx;
  for (int size = 1; size <= k; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (!fn(idx)) return false;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return true;
}

template <typename Fn>
inline bool for_each_choice(const Dims& d, Fn&& fn) {
  std::vector<int> choice(d.k(), 0);
  while (true) {
    if (!fn(choice)) return false;
    int i = d.k() - 1;
    while (i >= 0 && choice[i] == d.part(i) - 1) choice[i--] = 0;
    if (i < 0) return true;
    ++choice[i];
  }
}

}  // namespace detail

// First principal minor equal to 0, scanning column choices in odometer
// order and principal subsets by size then lexicographically.
inline std::optional<MinorWitness> first_failing_minor(const VectorMatrix& A) {
  std::optional<MinorWitness> hit;
  uint64_t w[64];
  detail::for_each_choice(A.dims(), [&](const std::vector<int>& choice) {
    detail::submatrix_words(A, choice, w);
    return detail::for_each_subset_by_size(A.k(), [&](const std::vector<int>& rows) {
      if (detail::principal_det(w, rows) == 0) {
        hit = MinorWitness{choice, rows};
        return false;
      }
      return true;
    });
  });
  return hit;
}

inline bool validate_minors(const VectorMatrix& A) {
  uint64_t w[64];
  return detail::for_each_choice(A.dims(), [&](const std::vector<int>& choice) {
    detail::submatrix_words(A, choice, w);
    return detail::for_each_subset_by_size(A.k(), [&](const std::vector<int>& rows) {
      return detail::principal_det(w, rows) == 1;
    });
  });
}

// Vertex route: the base polytope has one vertex per choice of an omitted
// facet l_i in 0..n_i from each factor; the n facets through that vertex
// must map to a GF(2) basis.  Concretely: start from the identity on the
// e_{(i,l)} basis and substitute row i of A for column (i, l_i-1) whenever
// l_i >= 1, then require odd determinant.
inline bool validate_vertices(const VectorMatrix& A) {
  const int k = A.k(), n = A.n();
  std::vector<int> l(k, 0);
  uint64_t w[64];
  while (true) {
    int i = k - 1;
    while (i >= 0 && l[i] == A.dims().part(i)) l[i--] = 0;
    if (i < 0) return true;
    ++l[i];
    // determinant is taken of the transpose: replaced columns become
    // packed rows, which suits the word representation
    for (int c = 0; c < n; ++c) w[c] = uint64_t(1) << c;
    for (int b = 0; b < k; ++b)
      if (l[b] >= 1) w[A.dims().offset(b) + l[b] - 1] = A.row_word(b);
    if (gf2_det_words(w, n) == 0) return false;
  }
}

inline bool validate(const VectorMatrix& A, ValidateMethod method) {
  return method == ValidateMethod::minors ? validate_minors(A)
                                          : validate_vertices(A);
}

struct BlockPermutation {
  std::vector<int> order;  // order[p] = source block placed at position p

  static BlockPermutation identity(int k) {
    BlockPermutation s;
    s.order.resize(k);
    for (int i = 0; i < k; ++i) s.order[i] = i;
    return s;
  }
  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
      if (order[i] != i) return false;
    return true;
  }
  bool operator==(const BlockPermutation&) const = default;
};

// Simultaneous row and block-column permutation; position p of the result
// holds source block order[p].
inline VectorMatrix conjugate(const VectorMatrix& A, const BlockPermutation& sigma) {
  const int k = A.k();
  std::vector<int> parts(k);
  for (int p = 0; p < k; ++p) parts[p] = A.dims().part(sigma.order[p]);
  VectorMatrix out{Dims(parts)};
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      for (int l = 0; l < out.dims().part(q); ++l)
        out.set_a(p, q, l, A.a(sigma.order[p], sigma.order[q], l));
  return out;
}

struct NormalizeResult {
  VectorMatrix matrix;
  BlockPermutation sigma;
};

namespace detail {

// Dependency j -> i whenever row j meets column block i (j != i): any
// triangular order must place j before i.  Kahn's algorithm; ties go to
// the smallest original index, or to available blocks with n_i >= 2 first
// when prefer_big is set.
inline std::optional<BlockPermutation> triangular_order(const VectorMatrix& A,
                                                        bool prefer_big) {
  const int k = A.k();
  std::vector<int> indeg(k, 0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (i != j && A.block_nonzero(j, i)) ++indeg[i];
  std::vector<char> placed(k, 0);
  BlockPermutation sigma;
  sigma.order.reserve(k);
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass) {
      for (int j = 0; j < k; ++j) {
        if (placed[j] || indeg[j] != 0) continue;
        if (prefer_big && pass == 0 && A.dims().part(j) < 2) continue;
        pick = j;
        break;
      }
      if (!prefer_big) break;
    }
    if (pick < 0) return std::nullopt;
    placed[pick] = 1;
    sigma.order.push_back(pick);
    for (int i = 0; i < k; ++i)
      if (i != pick && !placed[i] && A.block_nonzero(pick, i)) --indeg[i];
  }
  return sigma;
}

}  // namespace detail

// Conjugate to unipotent upper-triangular form.  Throws NotTriangulable on
// a cyclic dependency pattern (never reached for matrices that validate).
inline NormalizeResult normalize(const VectorMatrix& A) {
  auto sigma = detail::triangular_order(A, false);
  if (!sigma)
    throw NotTriangulable("normalize: cyclic block dependency, no triangular order");
  VectorMatrix out = conjugate(A, *sigma);
  if (!out.is_normalized())
    throw std::invalid_argument("normalize: diagonal blocks are not all ones");
  return {std::move(out), std::move(*sigma)};
}

// Order that is upper-triangular and additionally lists every block with
// n_i >= 2 before every block with n_i = 1, when one exists.  Greedy over
// the dependency poset; whenever such an order exists at all, every
// remaining big block has only big, already-placed predecessors, so the
// greedy choice cannot get stuck and "absent" is definitive.
inline std::optional<BlockPermutation> big_first_order(const VectorMatrix& A) {
  auto sigma = detail::triangular_order(A, true);
  if (!sigma) return std::nullopt;
  bool seen_small = false;
  for (int p = 0; p < A.k(); ++p) {
    if (A.dims().part(sigma->order[p]) == 1) seen_small = true;
    else if (seen_small) return std::nullopt;
  }
  return sigma;
}

// Restriction to the first `count` blocks and rows; on a normalized matrix
// this is the defining matrix of the height-`count` stage of the tower.
inline VectorMatrix leading_blocks(const VectorMatrix& A, int count) {
  std::vector<int> parts(A.dims().parts().begin(),
                         A.dims().parts().begin() + count);
  VectorMatrix out{Dims(std::move(parts))};
  for (int r = 0; r < count; ++r)
    for (int q = 0; q < count; ++q)
      for (int l = 0; l < A.dims().part(q); ++l)
        out.set_a(r, q, l, A.a(r, q, l));
  return out;
}

struct TowerStage {
  int fiber_dim = 0;
  // one class vector per fiber projective coordinate, each of length equal
  // to the stage index
  std::vector<std::vector<int>> classes;
};

// Reads the iterated projective-bundle structure off a normalized matrix:
// stage j is a real projective RP^{n_j} bundle whose defining line bundle
// classes are the columns of block j restricted to rows above the diagonal.
inline std::vector<TowerStage> tower_decomposition(const VectorMatrix& A) {
  if (!A.is_normalized())
    throw std::invalid_argument("tower_decomposition: input must be normalized");
  std::vector<TowerStage> stages(A.k());
  for (int j = 0; j < A.k(); ++j) {
    stages[j].fiber_dim = A.dims().part(j);
    stages[j].classes.resize(A.dims().part(j));
    for (int l = 0; l < A.dims().part(j); ++l) {
      stages[j].classes[l].resize(j);
      for (int r = 0; r < j; ++r) stages[j].classes[l][r] = A.a(r, j, l);
    }
  }
  return stages;
}

}  // namespace gbott
