#pragma once
// Integer matrices and Smith normal form.  Entries are arbitrary-precision
// (boost cpp_int) so the elimination can never overflow, even though every
// matrix this library feeds in has entries in {-2,...,2}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdlib>
#include <vector>

namespace gbott {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      assert(static_cast<int>(rows[i].size()) == c);
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

// Nonzero invariant factors d_1 | d_2 | ... of m, all positive.  The list
// length is the rank; unit factors are kept.
inline std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const int R = m.rows(), C = m.cols();
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < C; ++c) std::swap(m.at(a, c), m.at(b, c));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int r = 0; r < R; ++r) std::swap(m.at(r, a), m.at(r, b));
  };

  int t = 0;
  while (t < R && t < C) {
    // Smallest-magnitude nonzero entry of the trailing block becomes the
    // pivot candidate; absent one, the matrix is finished.
    int pr = -1, pc = -1;
    BigInt best;
    for (int r = t; r < R; ++r) {
      for (int c = t; c < C; ++c) {
        if (m.at(r, c) == 0) continue;
        BigInt a = abs(m.at(r, c));
        if (pr < 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    bool settled = false;
    while (!settled) {
      settled = true;
      // Euclidean steps shrink |pivot| every time a remainder survives,
      // so this loop terminates.
      for (int r = t + 1; r < R; ++r) {
        if (m.at(r, t) == 0) continue;
        BigInt q = m.at(r, t) / m.at(t, t);
        for (int c = t; c < C; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          swap_rows(t, r);
          settled = false;
        }
      }
      for (int c = t + 1; c < C; ++c) {
        if (m.at(t, c) == 0) continue;
        BigInt q = m.at(t, c) / m.at(t, t);
        for (int r = t; r < R; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(t, c);
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide the whole trailing block for d_t | d_{t+1}.
      for (int r = t + 1; r < R && settled; ++r) {
        for (int c = t + 1; c < C && settled; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (int cc = t; cc < C; ++cc) m.at(t, cc) += m.at(r, cc);
            settled = false;
          }
        }
      }
    }
    ++t;
  }

  std::vector<BigInt> inv;
  for (int i = 0; i < t; ++i) inv.push_back(abs(m.at(i, i)));
  return inv;
}

}  // namespace gbott
