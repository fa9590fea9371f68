#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbott/coxeter.hpp"
#include "gbott/errors.hpp"
#include "gbott/model.hpp"
#include "gbott/snf.hpp"

namespace gbott {

// Word in the alpha generators: signed 1-based indices, e.g. {1,-2,-1,-2}.
using GroupWord = std::vector<int>;

struct GroupFlags {
  bool abelian = false;
  bool nilpotent = false;
  bool torsion_free = false;
  bool solvable = true;
  bool aspherical = false;
  bool operator==(const GroupFlags&) const = default;
};

struct Presentation {
  int generators = 0;
  std::vector<GroupWord> relators;
  GroupFlags flags;
};

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<long long> torsion;  // each entry is 2
  bool operator==(const AbelianInvariants&) const = default;
};

// alpha_j = s_{j,0} followed by s_{i,l} for every set entry of row j,
// block-major.
inline std::vector<CoxeterWord> alpha_words(const VectorMatrix& A) {
  std::vector<CoxeterWord> alphas(A.k());
  for (int j = 0; j < A.k(); ++j) {
    CoxeterWord& w = alphas[j];
    w.push_back({j, 0});
    for (int i = 0; i < A.k(); ++i)
      for (int l = 0; l < A.dims().part(i); ++l)
        if (A.a(j, i, l)) w.push_back({i, l + 1});
  }
  return alphas;
}

// Image in the coordinate quotient: s_{i,l} with l >= 1 hits e_{(i,l)};
// s_{i,0} hits row i. Words in the kernel map to 0.
inline uint64_t lambda_image(const CoxeterWord& w, const VectorMatrix& A) {
  uint64_t v = 0;
  for (const CoxeterLetter& s : w)
    v ^= s.facet == 0 ? A.row_word(s.block)
                      : uint64_t{1} << (A.dims().offset(s.block) + s.facet - 1);
  return v;
}

// One relator per block with a higher-dimensional fibre, plus one per pair
// p < q with the uniform sign rule: the inverse appears on a generator
// exactly where its block is 1-dimensional, except that the first letter is
// always plain and the second flips only when additionally a_{p,1}^q = 1.
inline std::vector<GroupWord> relators(const VectorMatrix& A) {
  if (!A.is_normalized())
    throw std::invalid_argument("relators: matrix must be normalized");
  const Dims& d = A.dims();
  std::vector<GroupWord> out;
  for (int p = 0; p < A.k(); ++p)
    if (d.part(p) >= 2) out.push_back({p + 1, p + 1});
  for (int p = 0; p < A.k(); ++p)
    for (int q = p + 1; q < A.k(); ++q) {
      const bool small_p = d.part(p) == 1;
      const bool small_q = d.part(q) == 1;
      const bool coupled = small_q && A.a(p, q, 0);
      out.push_back({p + 1, coupled ? -(q + 1) : q + 1,
                     small_p ? -(p + 1) : p + 1, small_q ? -(q + 1) : q + 1});
    }
  return out;
}

// Substitute the alpha words; inverses reverse the letter sequence since
// every letter is an involution.
inline CoxeterWord expand_word(const GroupWord& g,
                               const std::vector<CoxeterWord>& alphas) {
  CoxeterWord w;
  for (int t : g) {
    CoxeterWord a = alphas[std::abs(t) - 1];
    if (t < 0) std::reverse(a.begin(), a.end());
    w.insert(w.end(), a.begin(), a.end());
  }
  return w;
}

inline bool is_abelian(const VectorMatrix& A) {
  for (int p = 0; p < A.k(); ++p)
    for (int q = p + 1; q < A.k(); ++q)
      if (A.dims().part(q) == 1 && A.a(p, q, 0)) return false;
  return true;
}

inline GroupFlags group_properties(const VectorMatrix& A) {
  GroupFlags f;
  f.abelian = is_abelian(A);
  f.nilpotent = f.abelian;
  bool all_small = true;
  for (int i = 0; i < A.k(); ++i) all_small &= A.dims().part(i) == 1;
  f.torsion_free = all_small;
  f.aspherical = all_small;
  f.solvable = true;
  return f;
}

inline Presentation presentation(const VectorMatrix& A) {
  Presentation p;
  p.generators = A.k();
  p.relators = relators(A);
  p.flags = group_properties(A);
  return p;
}

// Closed form: rank k - l - r and l + r copies of Z_2, where l counts blocks
// with n_i >= 2 and r counts 1-dimensional blocks q coupled to some p < q.
// Cross-checked against the Smith form of the abelianized relator matrix.
inline AbelianInvariants h1(const VectorMatrix& A) {
  const Dims& d = A.dims();
  const int k = A.k();
  int l = 0, r = 0;
  for (int i = 0; i < k; ++i)
    if (d.part(i) >= 2) ++l;
  for (int q = 0; q < k; ++q) {
    if (d.part(q) != 1) continue;
    for (int p = 0; p < q; ++p)
      if (A.a(p, q, 0)) {
        ++r;
        break;
      }
  }
  AbelianInvariants closed;
  closed.free_rank = k - l - r;
  closed.torsion.assign(l + r, 2);

  std::vector<std::vector<long long>> rows;
  for (const GroupWord& g : relators(A)) {
    std::vector<long long> row(k, 0);
    for (int t : g) row[std::abs(t) - 1] += t > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }
  IntMatrix m(static_cast<int>(rows.size()), k);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  const std::vector<BigInt> inv = smith_normal_form(m);
  AbelianInvariants oracle;
  oracle.free_rank = k - static_cast<long long>(inv.size());
  for (const BigInt& v : inv)
    if (v != 1) oracle.torsion.push_back(static_cast<long long>(v));

  if (!(closed == oracle))
    throw OracleMismatch("h1: closed form and Smith form disagree");
  return closed;
}

// Homotopy in degrees >= 2 splits over the fibres; 1-dimensional fibres
// contribute nothing and a fibre of dimension m contributes pi_j(S^m).
inline std::string higher_homotopy(const Dims& d, int j) {
  if (j < 2) throw std::invalid_argument("higher_homotopy: requires j >= 2");
  std::vector<std::string> factors;
  for (int i = 0; i < d.k(); ++i) {
    const int m = d.part(i);
    if (m == 1 || j < m) continue;
    factors.push_back(j == m ? "Z"
                             : "pi_" + std::to_string(j) + "(S^" +
                                   std::to_string(m) + ")");
  }
  if (factors.empty()) return "0";
  std::string out = factors[0];
  for (std::size_t t = 1; t < factors.size(); ++t) out += " x " + factors[t];
  return out;
}

}  // namespace gbott
