#pragma once
// Assembles every computed invariant of one manifold into a single JSON
// document with a stable key set, suitable for golden-file comparison and
// machine consumption.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbott/digraph.hpp"
#include "gbott/fan.hpp"
#include "gbott/fungroup.hpp"
#include "gbott/model.hpp"
#include "gbott/ring.hpp"
#include "gbott/sw.hpp"

namespace gbott {

// A class is a list of monomials, each an exponent array over z_1..z_k,
// ordered by degree and then lexicographically.
inline nlohmann::json element_to_json(const RingElement& e) {
  std::vector<std::vector<int>> monomials;
  monomials.reserve(e.terms().size());
  for (const auto& m : e.terms()) monomials.push_back(m.e);
  std::sort(monomials.begin(), monomials.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int da = 0, db = 0;
              for (int x : a) da += x;
              for (int x : b) db += x;
              return da != db ? da < db : a < b;
            });
  return monomials;
}

struct ReportOptions {
  bool include_dot = false;
  int homotopy_degree = 0;  // >= 2 adds the homotopy group in that degree
};

inline nlohmann::json build_report(const VectorMatrix& input,
                                   const ReportOptions& opts = {}) {
  if (!validate_minors(input))
    throw std::invalid_argument("report: matrix is not a valid defining matrix");
  const VectorMatrix A = normalize(input).matrix;

  nlohmann::json r;
  r["valid"] = true;
  r["dims"] = A.dims().parts();
  r["normalized_rows"] = A.row_lists();
  r["big_blocks_first"] = big_first_order(A).has_value();

  const SWClass sw = total_sw(A);
  const bool orientable = is_orientable(A);
  r["orientable"] = orientable;
  r["spin"] = orientable ? nlohmann::json(is_spin(A)) : nlohmann::json(nullptr);
  r["w1"] = element_to_json(sw[1]);
  r["w2"] = element_to_json(sw[2]);
  r["total_sw"] = element_to_json(sw.total());

  CohomologyRing ring(A);
  r["betti"] = ring.poincare();

  const Presentation p = presentation(A);
  r["pi1"] = {{"generators", p.generators}, {"relators", p.relators}};
  r["flags"] = {{"abelian", p.flags.abelian},
                {"nilpotent", p.flags.nilpotent},
                {"torsion_free", p.flags.torsion_free},
                {"solvable", p.flags.solvable},
                {"aspherical", p.flags.aspherical}};

  const AbelianInvariants h = h1(A);
  r["h1"] = {{"free_rank", h.free_rank}, {"torsion", h.torsion}};

  const Fan f = build_fan(A);
  r["fan"] = {{"flag", is_flag(f)}, {"smooth", is_smooth(f)}};

  if (opts.include_dot) r["digraph_dot"] = to_dot(build_digraph(A));
  if (opts.homotopy_degree >= 2)
    r["higher_homotopy"] = {
        {"degree", opts.homotopy_degree},
        {"groups", higher_homotopy(A.dims(), opts.homotopy_degree)}};
  return r;
}

}  // namespace gbott
