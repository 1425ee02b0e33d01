#include "pgw/hypothesis.hpp"

#include <algorithm>

namespace pgw {

bool is_monolithic(const PcGroup& G) {
  return center(G).order() == static_cast<std::size_t>(G.prime());
}

ZmCheck check_zm_condition(const PcGroup& G, std::span<const Subgroup> maximals) {
  const Subgroup Z = center(G);
  const auto all = G.elements();
  for (std::size_t idx = 0; idx < maximals.size(); ++idx) {
    const Subgroup& M = maximals[idx];
    const Subgroup ZM = center_of(G, M);
    for (const auto& m : ZM.elements()) {
      if (Z.contains(m)) continue;  // [m, g] = 1
      for (const auto& g : all) {
        if (M.contains(g)) continue;
        if (!Z.contains(G.comm(m, g)))
          return {false, ZmViolation{static_cast<int>(idx), m, g}};
      }
    }
  }
  return {};
}

ZmCheck check_zm_condition(const PcGroup& G) {
  const auto maximals = maximal_subgroups(G);
  return check_zm_condition(G, maximals);
}

HypothesisReport check_theorem_hypotheses(const PcGroup& G) {
  HypothesisReport r;
  const Subgroup g = whole_group(G);
  const Subgroup Z = center(G);
  const Subgroup Phi = frattini(G);
  const Subgroup Z2 = second_center(G);
  const auto maximals = maximal_subgroups(G);

  r.p_odd = G.prime() > 2;
  r.nonabelian = Z.order() < g.order();
  r.monolithic = Z.order() == static_cast<std::size_t>(G.prime());
  r.all_maximals_nonabelian = std::none_of(maximals.begin(), maximals.end(),
                                           [&](const Subgroup& M) { return is_abelian(G, M); });
  r.has_abelian_maximal = !r.all_maximals_nonabelian;

  const ZmCheck zm = check_zm_condition(G, maximals);
  r.zm_condition = zm.holds;
  r.zm_counterexample = zm.witness;

  const Subgroup ZPhi = center_of(G, Phi);
  r.corollary_centralizer_condition = centralizer(G, ZPhi) == Phi;

  auto& d = r.diagnostics;
  d.z2_abelian = is_abelian(G, Z2);
  d.z2_in_z_phi = Z2.is_subset_of(ZPhi);
  for (const auto& M : maximals) d.zm_in_z2.push_back(center_of(G, M).is_subset_of(Z2));
  const QuotientFacts q = quotient_facts(G, Z2, Z);
  d.z2_mod_z_elementary = q.elementary_abelian;
  d.rank_z2_mod_z = q.rank;
  d.rank_g = rank(G, g);
  d.omega1_z2_exceeds_center = std::any_of(Z2.elements().begin(), Z2.elements().end(), [&](const Element& u) {
    return !Z.contains(u) && G.pow(u, G.prime()).is_identity();
  });
  return r;
}

HypothesisReport check_corollary_hypotheses(const PcGroup& G) { return check_theorem_hypotheses(G); }

}  // namespace pgw
