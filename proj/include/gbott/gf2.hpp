#pragma once
// Dense linear algebra over GF(2).  Rows are packed into 64-bit words,
// column c sits at bit c % 64 of word c / 64.

#include <cassert>
#include <cstdint>
#include <vector>

namespace gbott {

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        words_(cols <= 0 ? 1 : (cols + 63) / 64),
        bits_(static_cast<std::size_t>(rows < 0 ? 0 : rows) * words_, 0) {
    assert(rows >= 0 && cols >= 0);
  }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (word(r, c / 64) >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = word(r, c / 64);
    const uint64_t m = uint64_t(1) << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }
  void toggle(int r, int c) { word(r, c / 64) ^= uint64_t(1) << (c % 64); }

  // row dst += row src
  void xor_rows(int dst, int src) {
    uint64_t* d = &word(dst, 0);
    const uint64_t* s = &word(src, 0);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* x = &word(a, 0);
    uint64_t* y = &word(b, 0);
    for (int w = 0; w < words_; ++w) std::swap(x[w], y[w]);
  }

  bool operator==(const Gf2Matrix&) const = default;

 private:
  uint64_t& word(int r, int w) { return bits_[std::size_t(r) * words_ + w]; }
  const uint64_t& word(int r, int w) const {
    return bits_[std::size_t(r) * words_ + w];
  }

  int rows_ = 0, cols_ = 0, words_ = 1;
  std::vector<uint64_t> bits_;
};

// Determinant of a square matrix, 0 or 1.  Takes a copy and eliminates
// in place.
inline int gf2_det(Gf2Matrix m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    m.swap_rows(pivot, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.get(r, c)) m.xor_rows(r, c);
    }
  }
  return 1;
}

inline int gf2_rank(Gf2Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(pivot, rank);
    for (int r = rank + 1; r < rows; ++r) {
      if (m.get(r, c)) m.xor_rows(r, rank);
    }
    ++rank;
  }
  return rank;
}

// Determinant of an n x n system given as one packed word per row.
// Fast path used by the validators; n <= 64.
inline int gf2_det_words(uint64_t* row, int n) {
  for (int c = 0; c < n; ++c) {
    const uint64_t bit = uint64_t(1) << c;
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (row[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    std::swap(row[pivot], row[c]);
    for (int r = c + 1; r < n; ++r) {
      if (row[r] & bit) row[r] ^= row[c];
    }
  }
  return 1;
}

}  // namespace gbott
