#pragma once

// Subgroup-level computations on fully enumerated element sets.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "pgw/pc.hpp"

namespace pgw {

/// A subgroup stored as its sorted element set plus the generators it was
/// built from. Equality compares element sets only.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<Element> sorted_elements, std::vector<Element> gens);

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& gens() const { return gens_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Element& x) const;
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

struct CentralSeries {
  enum class Kind { Upper, Lower };
  Kind kind = Kind::Upper;
  std::vector<Subgroup> terms;  // upper: Z_0 = 1, ...; lower: gamma_1 = G, ...
};

struct QuotientFacts {
  std::uint64_t order = 1;
  bool elementary_abelian = true;
  int rank = 0;  // -1 when not elementary abelian
};

Subgroup closure(const PcGroup& G, std::span<const Element> gens);
Subgroup whole_group(const PcGroup& G);
Subgroup trivial_subgroup(const PcGroup& G);

Subgroup center(const PcGroup& G);
/// Z(H) with H as the ambient group.
Subgroup center_of(const PcGroup& G, const Subgroup& H);
Subgroup centralizer(const PcGroup& G, const Subgroup& S);
Subgroup centralizer(const PcGroup& G, const Element& x);
/// Elementwise version of centralizer, for cross-checks.
Subgroup centralizer_exhaustive(const PcGroup& G, const Subgroup& S);

/// [A, B], as the normal closure in <A, B> of the generator commutators.
Subgroup commutator_subgroup(const PcGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup derived(const PcGroup& G);
/// G^p, generated by all p-th powers.
Subgroup agemo(const PcGroup& G);
Subgroup frattini(const PcGroup& G);
/// Phi(H) = H^p [H, H] computed inside H.
Subgroup frattini_of(const PcGroup& G, const Subgroup& H);

bool is_abelian(const PcGroup& G, const Subgroup& H);
bool is_normal(const PcGroup& G, const Subgroup& H);
/// Normality of B in A.
bool is_normal_in(const PcGroup& G, const Subgroup& B, const Subgroup& A);

CentralSeries upper_central_series(const PcGroup& G);
CentralSeries lower_central_series(const PcGroup& G);
int nilpotency_class(const PcGroup& G);
/// Z_2(G).
Subgroup second_center(const PcGroup& G);

/// Coordinates of G/Phi(G) as F_p^d with respect to lifts x_1..x_d.
class FrattiniQuotient {
 public:
  explicit FrattiniQuotient(const PcGroup& G);
  int rank() const { return static_cast<int>(lifts_.size()); }
  const Subgroup& frattini() const { return frattini_; }
  const std::vector<Element>& lifts() const { return lifts_; }
  /// Coordinates of x Phi(G) in F_p^d.
  std::vector<int> coords(const Element& x) const;
  /// x_1^{v_1} ... x_d^{v_d}
  Element lift(std::span<const int> v) const;

 private:
  PcGroup group_;
  Subgroup frattini_;
  std::vector<Element> lifts_;
  std::unordered_map<Element, int, ElementHash> code_;  // base-p coordinate code
};

/// All index-p subgroups, as preimages of hyperplanes of G/Phi(G). The order
/// follows the normalised defining functionals lexicographically.
std::vector<Subgroup> maximal_subgroups(const PcGroup& G);

/// Elements of order dividing p in an abelian subgroup.
Subgroup omega1(const PcGroup& G, const Subgroup& A);

/// Minimal number of generators of H.
int rank(const PcGroup& G, const Subgroup& H);

QuotientFacts quotient_facts(const PcGroup& G, const Subgroup& A, const Subgroup& B);

/// Lexicographically greedy generating set: scan elements in order and keep
/// each one not already generated. Deterministic for a given element set.
std::vector<Element> canonical_generators(const PcGroup& G, const Subgroup& H);

}  // namespace pgw
