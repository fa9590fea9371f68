#pragma once
// Mod-2 cohomology ring of a generalized real Bott manifold, presented on
// one generator z_i per block after eliminating the degree-one relations
// x_{il} = sum_j a(j,i,l) x_{j0}.  What remains is one rewriting rule per
// block: z_i^{n_i+1} -> tail_i, the tail being the lower-order part of
// z_i * prod_l (sum_j a(j,i,l) z_j).  Monomials with every exponent at
// most n_i form a basis; reduction rewrites the largest reducible
// monomial under the order that weighs z_k heaviest, which the rule heads
// strictly dominate, so it terminates.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "gbott/model.hpp"

namespace gbott {

struct Monomial {
  std::vector<int> e;  // exponent per generator

  Monomial() = default;
  explicit Monomial(int k) : e(k, 0) {}
  static Monomial var(int k, int i, int power = 1) {
    Monomial m(k);
    m.e[i] = power;
    return m;
  }

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  Monomial times(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
    return m;
  }
  bool operator==(const Monomial&) const = default;
};

// z_k > ... > z_1: the highest-index exponent decides first.
inline bool monomial_less(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

// Polynomial over GF(2): the set of its monomials, sorted ascending.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(Monomial m) { terms_.push_back(std::move(m)); }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool homogeneous() const {
    for (const auto& m : terms_)
      if (m.degree() != terms_.front().degree()) return false;
    return true;
  }

  void toggle(const Monomial& m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, monomial_less);
    if (it != terms_.end() && *it == m)
      terms_.erase(it);
    else
      terms_.insert(it, m);
  }

  bool contains(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, monomial_less);
    return it != terms_.end() && *it == m;
  }

  RingElement plus(const RingElement& o) const {
    RingElement out;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (a == terms_.end())
        out.terms_.push_back(*b++);
      else if (b == o.terms_.end())
        out.terms_.push_back(*a++);
      else if (*a == *b) {
        ++a;
        ++b;
      } else if (monomial_less(*a, *b))
        out.terms_.push_back(*a++);
      else
        out.terms_.push_back(*b++);
    }
    return out;
  }

  // same polynomial over a larger generator set (extra generators last)
  RingElement lifted(int new_k) const {
    RingElement out;
    for (auto m : terms_) {
      m.e.resize(new_k, 0);
      out.terms_.push_back(std::move(m));
    }
    return out;
  }

  bool operator==(const RingElement&) const = default;

 private:
  std::vector<Monomial> terms_;
};

// Plain polynomial product, no reduction.
inline RingElement free_multiply(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) out.toggle(ma.times(mb));
  return out;
}

class CohomologyRing {
 public:
  explicit CohomologyRing(const VectorMatrix& A) : dims_(A.dims()) {
    if (!A.is_normalized())
      throw std::invalid_argument("cohomology: matrix must be normalized first");
    const int k = dims_.k();
    tails_.reserve(k);
    for (int i = 0; i < k; ++i) {
      RingElement rel{Monomial::var(k, i)};
      for (int l = 0; l < dims_.part(i); ++l) {
        RingElement factor;
        for (int j = 0; j <= i; ++j)
          if (A.a(j, i, l)) factor.toggle(Monomial::var(k, j));
        rel = free_multiply(rel, factor);
      }
      Monomial head = Monomial::var(k, i, dims_.part(i) + 1);
      assert(rel.contains(head));
      rel.toggle(head);  // remove the head, keep the tail
      tails_.push_back(std::move(rel));
    }
  }

  const Dims& dims() const { return dims_; }
  int k() const { return dims_.k(); }

  RingElement zero() const { return {}; }
  RingElement one() const { return RingElement{Monomial(k())}; }
  RingElement z(int i) const { return RingElement{Monomial::var(k(), i)}; }
  const RingElement& tail(int i) const { return tails_[i]; }

  RingElement reduce(RingElement p) const {
    while (true) {
      int term = -1, var = -1;
      const auto& ts = p.terms();
      for (int t = static_cast<int>(ts.size()) - 1; t >= 0 && term < 0; --t)
        for (int i = k() - 1; i >= 0; --i)
          if (ts[t].e[i] > dims_.part(i)) {
            term = t;
            var = i;
            break;
          }
      if (term < 0) return p;
      Monomial m = ts[term];
      Monomial cof = m;
      cof.e[var] -= dims_.part(var) + 1;
      p.toggle(m);
      for (const auto& tm : tails_[var].terms()) p.toggle(tm.times(cof));
    }
  }

  RingElement multiply(const RingElement& a, const RingElement& b) const {
    return reduce(free_multiply(a, b));
  }

  // Rewriting preserves total degree, so terms above maxdeg can be dropped
  // as soon as they appear.
  RingElement multiply_truncated(const RingElement& a, const RingElement& b,
                                 int maxdeg) const {
    RingElement out;
    for (const auto& ma : a.terms())
      for (const auto& mb : b.terms()) {
        Monomial m = ma.times(mb);
        if (m.degree() <= maxdeg) out.toggle(m);
      }
    return reduce(out);
  }

  RingElement component(const RingElement& p, int degree) const {
    RingElement out;
    for (const auto& m : p.terms())
      if (m.degree() == degree) out.toggle(m);
    return out;
  }

  std::vector<Monomial> basis() const {
    std::vector<Monomial> out;
    Monomial m(k());
    while (true) {
      out.push_back(m);
      int i = 0;
      while (i < k() && m.e[i] == dims_.part(i)) m.e[i++] = 0;
      if (i == k()) break;
      ++m.e[i];
    }
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
  }

  // mod-2 Betti numbers b_0..b_n
  std::vector<long long> poincare() const {
    std::vector<long long> b(dims_.n() + 1, 0);
    for (const auto& m : basis()) ++b[m.degree()];
    return b;
  }

 private:
  Dims dims_;
  std::vector<RingElement> tails_;
};

}  // namespace gbott
