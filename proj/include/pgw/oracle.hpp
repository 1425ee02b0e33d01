#pragma once

// Brute-force enumeration of Aut(G) for desk-scale groups. Independent of
// the constructions in automorphism.hpp; used to cross-check them.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgw/pc.hpp"

namespace pgw {

struct OracleOptions {
  /// Skip candidate tuples that are dependent modulo Phi(G).
  bool prune = true;
  int jobs = 1;
  std::optional<double> budget_seconds;
  /// Enumerate images of these elements instead of f_1..f_d. They must
  /// generate G; images of the pc generators are then derived from words.
  std::optional<std::vector<Element>> lifts;
  /// Keep the generator images of every automorphism found.
  bool keep_automorphisms = false;
};

struct AutCount {
  std::uint64_t total = 0;
  std::uint64_t inner = 0;
  std::uint64_t order_p_noninner_fixing_frattini = 0;
  std::uint64_t candidates = 0;
  std::chrono::duration<double> elapsed{};
  /// Sorted generator-image tuples (when requested).
  std::vector<std::vector<Element>> automorphisms;
  /// Sorted tuples of the order-p, non-inner, Phi-fixing bucket (always kept).
  std::vector<std::vector<Element>> bucket;
};

/// Throws MissingDefinitions, SizeCap (group not indexed) or Timeout.
AutCount enumerate_automorphisms(const PcGroup& G, const OracleOptions& options = {});

/// Checks the inner count, the conjugation witnesses of every automorphism
/// classified as inner, and membership of the constructed theorem witness in
/// the oracle's bucket. Throws Mismatch.
bool cross_validate(const PcGroup& G, const OracleOptions& options = {});
/// Same checks on an existing enumeration made with keep_automorphisms.
bool cross_validate(const PcGroup& G, const AutCount& count);

}  // namespace pgw
