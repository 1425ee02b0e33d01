#pragma once

#include <optional>
#include <vector>

#include "pgw/pc.hpp"
#include "pgw/structure.hpp"

namespace pgw {

/// A triple (M, m, g) with m in Z(M), g outside M and [m, g] outside Z(G).
struct ZmViolation {
  int maximal_index = 0;  // position in maximal_subgroups(G)
  Element m;
  Element g;
};

/// Facts from the existence proof. They are reported, not required: the
/// proof only derives them while assuming no suitable automorphism exists.
struct HypothesisDiagnostics {
  bool z2_abelian = false;
  bool z2_in_z_phi = false;              // Z_2(G) <= Z(Phi(G))
  std::vector<bool> zm_in_z2;            // Z(M) <= Z_2(G), one entry per maximal M
  bool z2_mod_z_elementary = false;
  int rank_z2_mod_z = -1;                // -1 when Z_2/Z is not elementary abelian
  int rank_g = 0;
  bool omega1_z2_exceeds_center = false; // Z_2 has an element of order p outside Z(G)
};

struct HypothesisReport {
  bool p_odd = false;
  bool nonabelian = false;
  bool monolithic = false;
  bool all_maximals_nonabelian = false;
  bool zm_condition = false;
  std::optional<ZmViolation> zm_counterexample;
  bool corollary_centralizer_condition = false;  // C_G(Z(Phi(G))) = Phi(G)
  bool has_abelian_maximal = false;
  HypothesisDiagnostics diagnostics;

  bool theorem_applicable() const {
    return p_odd && nonabelian && monolithic && all_maximals_nonabelian && zm_condition;
  }
  bool corollary_applicable() const {
    return p_odd && monolithic && corollary_centralizer_condition && zm_condition;
  }
};

bool is_monolithic(const PcGroup& G);

struct ZmCheck {
  bool holds = true;
  std::optional<ZmViolation> witness;
};

/// [Z(M), g] lies in Z(G) for every maximal M and g outside M, checked
/// elementwise over the set of commutators.
ZmCheck check_zm_condition(const PcGroup& G, std::span<const Subgroup> maximals);
ZmCheck check_zm_condition(const PcGroup& G);

HypothesisReport check_theorem_hypotheses(const PcGroup& G);
/// Same report; the corollary verdict is corollary_applicable().
HypothesisReport check_corollary_hypotheses(const PcGroup& G);

}  // namespace pgw
