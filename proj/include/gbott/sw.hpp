#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gbott/errors.hpp"
#include "gbott/model.hpp"
#include "gbott/ring.hpp"

namespace gbott {

// Total Stiefel-Whitney class split by degree: w[d] is homogeneous of degree
// d, w[0] = 1, and w.size() == n + 1.
struct SWClass {
  std::vector<RingElement> w;

  // Zero above the manifold dimension.
  RingElement operator[](int d) const {
    return d < static_cast<int>(w.size()) ? w[d] : RingElement{};
  }
  int top_degree() const { return static_cast<int>(w.size()) - 1; }

  RingElement total() const {
    RingElement t;
    for (const auto& c : w) t = t.plus(c);
    return t;
  }

  bool operator==(const SWClass&) const = default;
};

namespace detail {

// 1 + sum_{j <= block} a_{j,col}^{block} z_j.
inline RingElement tangent_factor(const CohomologyRing& ring,
                                  const VectorMatrix& A, int block, int col) {
  RingElement f = ring.one();
  for (int j = 0; j <= block; ++j)
    if (A.a(j, block, col)) f.toggle(Monomial::var(ring.k(), j));
  return f;
}

inline SWClass graded(const CohomologyRing& ring, const RingElement& total) {
  SWClass out;
  out.w.resize(ring.dims().n() + 1);
  for (const auto& m : total.terms()) out.w[m.degree()].toggle(m);
  return out;
}

}  // namespace detail

// Reduced product of all n + k line-bundle factors. With maxdeg >= 0 the
// accumulation drops terms above that degree; sound because reduction
// preserves degree, so discarded terms never feed back into lower degrees.
inline RingElement sw_product(const CohomologyRing& ring, const VectorMatrix& A,
                              int maxdeg = -1) {
  RingElement acc = ring.one();
  auto mult = [&](const RingElement& f) {
    acc = maxdeg < 0 ? ring.multiply(acc, f)
                     : ring.multiply_truncated(acc, f, maxdeg);
  };
  for (int i = 0; i < A.k(); ++i) {
    RingElement base = ring.one();
    base.toggle(Monomial::var(ring.k(), i));
    mult(base);
    for (int l = 0; l < A.dims().part(i); ++l)
      mult(detail::tangent_factor(ring, A, i, l));
  }
  return acc;
}

inline SWClass total_sw(const VectorMatrix& A) {
  CohomologyRing ring(A);
  return detail::graded(ring, sw_product(ring, A));
}

// Same class computed stage by stage along the fibre-bundle tower. The
// subring generated by the leading j blocks is closed under reduction, so the
// stage-j total is the lifted stage-(j-1) total times the factors the j-th
// fibre contributes.
inline SWClass total_sw_recursive(const VectorMatrix& A) {
  RingElement acc{Monomial(0)};
  for (int j = 1; j <= A.k(); ++j) {
    const VectorMatrix head = leading_blocks(A, j);
    const CohomologyRing ring(head);
    acc = acc.lifted(j);
    RingElement base = ring.one();
    base.toggle(Monomial::var(j, j - 1));
    acc = ring.multiply(acc, base);
    for (int l = 0; l < head.dims().part(j - 1); ++l)
      acc = ring.multiply(acc, detail::tangent_factor(ring, head, j - 1, l));
  }
  const CohomologyRing full(A);
  return detail::graded(full, acc);
}

// Row j of A contributes z_j exactly when its total weight is even.
inline RingElement w1_closed(const VectorMatrix& A) {
  RingElement w1;
  for (int j = 0; j < A.k(); ++j)
    if (A.row_weight(j) % 2 == 0) w1.toggle(Monomial::var(A.k(), j));
  return w1;
}

inline bool is_orientable(const VectorMatrix& A) {
  for (int j = 0; j < A.k(); ++j)
    if (A.row_weight(j) % 2 == 0) return false;
  return true;
}

// GF(2) quantities entering the degree-2 coefficient formulas, computed on
// the matrix as given. t_s counts column pairs within a row; t_rs counts
// columns shared by two rows; combined(r,s) folds in the square rewriting
// z_s^2 -> sum_j a_{j,1}^s z_j z_s available when n_s = 1.
struct SpinTerms {
  int k = 0;
  std::vector<uint8_t> row_pairs;   // per block s
  std::vector<uint8_t> shared;      // per pair r < s
  std::vector<uint8_t> pair_coeff;  // per pair r < s, after square rewriting

  int pair_index(int r, int s) const {
    return r * k - r * (r + 1) / 2 + (s - r - 1);
  }
  int t_s(int s) const { return row_pairs[s]; }
  int t_rs(int r, int s) const { return shared[pair_index(r, s)]; }
  int combined(int r, int s) const { return pair_coeff[pair_index(r, s)]; }
};

inline SpinTerms spin_terms(const VectorMatrix& A) {
  SpinTerms t;
  t.k = A.k();
  t.row_pairs.resize(t.k);
  for (int s = 0; s < t.k; ++s) {
    const int w = A.row_weight(s);
    t.row_pairs[s] = static_cast<uint8_t>((w * (w - 1) / 2) & 1);
  }
  for (int r = 0; r < t.k; ++r)
    for (int s = r + 1; s < t.k; ++s) {
      const uint8_t dot = static_cast<uint8_t>(
          std::popcount(A.row_word(r) & A.row_word(s)) & 1);
      uint8_t comb = dot;
      if (A.dims().part(s) == 1 && A.a(r, s, 0)) comb ^= 1 ^ t.row_pairs[s];
      t.shared.push_back(dot);
      t.pair_coeff.push_back(comb);
    }
  return t;
}

// Degree-2 coefficients on the square-free basis, simplified under the
// assumption that every row sum is odd; equals the degree-2 component of
// total_sw exactly on orientable input.
inline RingElement w2_closed(const VectorMatrix& A) {
  const SpinTerms t = spin_terms(A);
  const int k = A.k();
  RingElement w2;
  for (int s = 0; s < k; ++s)
    if (A.dims().part(s) >= 2 && !t.t_s(s))
      w2.toggle(Monomial::var(k, s, 2));
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s)
      if (t.combined(r, s))
        w2.toggle(Monomial::var(k, r).times(Monomial::var(k, s)));
  return w2;
}

// With the big-blocks-first ordering the vanishing of w_2 splits into three
// identity families over GF(2); without such an ordering fall back to the
// degree-truncated ring expansion.
inline bool is_spin(const VectorMatrix& A) {
  if (!is_orientable(A))
    throw NotOrientable("spin verdict requires an orientable manifold");
  if (const auto ord = big_first_order(A)) {
    const VectorMatrix B = conjugate(A, *ord);
    const SpinTerms t = spin_terms(B);
    for (int s = 0; s < B.k(); ++s)
      if (B.dims().part(s) >= 2 && t.t_s(s) != 1) return false;
    for (int r = 0; r < B.k(); ++r)
      for (int s = r + 1; s < B.k(); ++s) {
        if (B.dims().part(s) >= 2 && t.t_rs(r, s) != 0) return false;
        if (B.dims().part(s) == 1 && t.combined(r, s) != 0) return false;
      }
    return true;
  }
  const CohomologyRing ring(A);
  return ring.component(sw_product(ring, A, 2), 2).is_zero();
}

// Specialization to towers of 1-dimensional fibres, phrased via C = A - I.
// Pair condition over GF(2): <c_r, c_s> + c_{r,s} * (column pairs of c_s) = 0.
inline bool real_bott_spin_C(const VectorMatrix& A) {
  const int k = A.k();
  for (int i = 0; i < k; ++i)
    if (A.dims().part(i) != 1)
      throw NotRealBott("requires every fibre to be one-dimensional");
  if (!is_orientable(A))
    throw NotOrientable("spin verdict requires an orientable manifold");
  std::vector<uint64_t> c(k);
  for (int r = 0; r < k; ++r) c[r] = A.row_word(r) ^ (uint64_t{1} << r);
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s) {
      const int dot = std::popcount(c[r] & c[s]) & 1;
      const int w = std::popcount(c[s]);
      const int pairs = (w * (w - 1) / 2) & 1;
      const int crs = static_cast<int>((c[r] >> s) & 1);
      if ((dot ^ (crs & pairs)) != 0) return false;
    }
  return true;
}

}  // namespace gbott
