#pragma once

// Endomorphism candidates given by generator images, their certification as
// automorphisms, and the constructions of non-inner automorphisms of order p.

#include <map>
#include <optional>
#include <vector>

#include "pgw/pc.hpp"
#include "pgw/structure.hpp"

namespace pgw {

/// Candidate map f_i -> images[i]. Not checked to be a homomorphism.
class GenMap {
 public:
  GenMap(PcGroup group, std::vector<Element> images);
  static GenMap identity(const PcGroup& G);

  const PcGroup& group() const { return group_; }
  const std::vector<Element>& images() const { return images_; }

  bool operator==(const GenMap& other) const { return images_ == other.images_; }

 private:
  PcGroup group_;
  std::vector<Element> images_;
};

/// Substitutes images[i] for f_i in the normal-form word of x.
Element apply(const GenMap& map, const Element& x);

/// A GenMap that respects every relation and is surjective. Only produced by
/// verify() and by operations that preserve the certificate.
class Automorphism {
 public:
  const GenMap& map() const { return map_; }
  const PcGroup& group() const { return map_.group(); }
  const std::vector<Element>& images() const { return map_.images(); }
  Element operator()(const Element& x) const { return apply(map_, x); }

  bool operator==(const Automorphism& other) const { return map_ == other.map_; }

 private:
  explicit Automorphism(GenMap map) : map_(std::move(map)) {}
  friend Automorphism verify(GenMap map);
  friend Automorphism compose(const Automorphism& a, const Automorphism& b);
  GenMap map_;
};

/// Throws RelationViolated or NotSurjective.
Automorphism verify(GenMap map);
/// Relation check only; no surjectivity test.
bool respects_relations(const GenMap& map);

/// (a o b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
std::uint64_t aut_order(const Automorphism& a);
bool equal(const Automorphism& a, const Automorphism& b);
Automorphism identity_automorphism(const PcGroup& G);

/// x -> t^-1 x t
Automorphism inner_from(const PcGroup& G, const Element& t);

struct InnerCheck {
  bool inner = false;
  std::optional<Element> witness;  // lexicographically least coset representative
};

/// Precomputes conjugation images for one representative of each coset of
/// Z(G); reuse it when testing many automorphisms of the same group.
class InnerTester {
 public:
  explicit InnerTester(const PcGroup& G);
  InnerCheck check(const Automorphism& a) const;
  std::size_t inner_count() const { return by_images_.size(); }
  const std::vector<Element>& representatives() const { return reps_; }

 private:
  std::vector<Element> reps_;
  std::map<std::vector<Element>, Element> by_images_;
};

InnerCheck is_inner(const Automorphism& a);

/// Checks the generators of H; the homomorphism property covers the rest.
bool fixes_elementwise(const Automorphism& a, const Subgroup& H);
bool fixes_every_element(const Automorphism& a, const Subgroup& H);

/// Extends g -> g u, m -> m (m in M) to an automorphism. Requires M maximal,
/// g outside M, u in Z(M) and (g u)^p = g^p. The result fixes M elementwise
/// and has order p unless u = 1.
Automorphism extend_to_automorphism(const PcGroup& G, const Subgroup& M, const Element& g,
                                    const Element& u);

struct TheoremWitness {
  Element u;
  Subgroup M;
  Element g;
  Automorphism automorphism;
  bool non_inner = false;
  bool fixes_frattini = false;
};

struct WitnessOptions {
  /// Skip the hypothesis check (test hook). Non-inner-ness is then reported
  /// but not asserted.
  bool bypass_hypotheses = false;
};

/// Picks the least u in Omega_1(Z_2(G)) outside Z(G), M = C_G(u) and the least
/// pc generator g outside M, and extends g -> g u.
TheoremWitness construct_theorem_witness(const PcGroup& G, WitnessOptions options = {});

}  // namespace pgw
