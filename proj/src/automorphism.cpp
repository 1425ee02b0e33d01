#include "pgw/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_set>

#include "pgw/errors.hpp"
#include "pgw/hypothesis.hpp"

namespace pgw {

namespace {

std::string describe(const GenMap& map) {
  std::ostringstream os;
  for (std::size_t i = 0; i < map.images().size(); ++i)
    os << (i ? ", " : "") << "f" << i + 1 << " -> " << to_string(map.images()[i]);
  return os.str();
}

std::string describe(std::span<const Element> xs) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << to_string(xs[i]);
  os << ">";
  return os.str();
}

}  // namespace

GenMap::GenMap(PcGroup group, std::vector<Element> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(group_.ngens()))
    throw InputError("a generator map needs one image per generator");
}

GenMap GenMap::identity(const PcGroup& G) {
  std::vector<Element> images;
  for (int i = 0; i < G.ngens(); ++i) images.push_back(G.generator(i));
  return GenMap(G, std::move(images));
}

Element apply(const GenMap& map, const Element& x) {
  const PcGroup& G = map.group();
  Element r = G.identity();
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = G.mul(r, G.pow(map.images()[static_cast<std::size_t>(i)], x[i]));
  return r;
}

namespace {

// Returns a description of the first violated relation, or an empty string.
std::string first_violation(const GenMap& map) {
  const PcGroup& G = map.group();
  const auto& img = map.images();
  const int n = G.ngens();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Element lhs = G.comm(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      if (lhs != apply(map, G.commutator_relation(i, j)))
        return "[f" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) + "]";
    }
  for (int i = 0; i < n; ++i)
    if (G.pow(img[static_cast<std::size_t>(i)], G.prime()) != apply(map, G.power_relation(i)))
      return "f" + std::to_string(i + 1) + "^p";
  return {};
}

}  // namespace

bool respects_relations(const GenMap& map) { return first_violation(map).empty(); }

Automorphism verify(GenMap map) {
  if (auto which = first_violation(map); !which.empty())
    throw RelationViolated("relation " + which + " violated by " + describe(map));
  const Subgroup image = closure(map.group(), map.images());
  if (auto o = map.group().order(); !o || image.order() != *o)
    throw NotSurjective("images generate a subgroup of order " + std::to_string(image.order()));
  return Automorphism(std::move(map));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<Element> images;
  for (const auto& y : b.images()) images.push_back(a(y));
  return Automorphism(GenMap(a.group(), std::move(images)));
}

std::uint64_t aut_order(const Automorphism& a) {
  const GenMap id = GenMap::identity(a.group());
  std::uint64_t k = 1;
  Automorphism power = a;
  while (!(power.map() == id)) {
    power = compose(a, power);
    ++k;
  }
  return k;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism r = identity_automorphism(a.group());
  const std::uint64_t k = aut_order(a);
  for (std::uint64_t i = 1; i < k; ++i) r = compose(a, r);
  return r;
}

bool equal(const Automorphism& a, const Automorphism& b) { return a == b; }

Automorphism identity_automorphism(const PcGroup& G) { return verify(GenMap::identity(G)); }

Automorphism inner_from(const PcGroup& G, const Element& t) {
  std::vector<Element> images;
  for (int i = 0; i < G.ngens(); ++i) images.push_back(G.conj(G.generator(i), t));
  return verify(GenMap(G, std::move(images)));
}

InnerTester::InnerTester(const PcGroup& G) {
  const Subgroup Z = center(G);
  std::unordered_set<Element, ElementHash> covered;
  for (const auto& t : G.elements()) {
    if (covered.contains(t)) continue;
    reps_.push_back(t);
    for (const auto& z : Z.elements()) covered.insert(G.mul(t, z));
    std::vector<Element> images;
    for (int i = 0; i < G.ngens(); ++i) images.push_back(G.conj(G.generator(i), t));
    by_images_.emplace(std::move(images), t);
  }
}

InnerCheck InnerTester::check(const Automorphism& a) const {
  auto it = by_images_.find(a.images());
  if (it == by_images_.end()) return {};
  return {true, it->second};
}

InnerCheck is_inner(const Automorphism& a) { return InnerTester(a.group()).check(a); }

bool fixes_elementwise(const Automorphism& a, const Subgroup& H) {
  const bool fixed = std::all_of(H.gens().begin(), H.gens().end(),
                                 [&](const Element& h) { return a(h) == h; });
#ifndef NDEBUG
  assert(fixed == fixes_every_element(a, H));
#endif
  return fixed;
}

bool fixes_every_element(const Automorphism& a, const Subgroup& H) {
  return std::all_of(H.elements().begin(), H.elements().end(),
                     [&](const Element& h) { return a(h) == h; });
}

Automorphism extend_to_automorphism(const PcGroup& G, const Subgroup& M, const Element& g,
                                    const Element& u) {
  const int p = G.prime();
  const auto order = G.order();
  if (!order || M.order() * static_cast<std::uint64_t>(p) != *order)
    throw PreconditionFailed("M is not a maximal subgroup (index p)");
  if (M.contains(g)) throw PreconditionFailed("g lies in M");
  if (!center_of(G, M).contains(u)) throw PreconditionFailed("u is not in Z(M)");
  const Element gu = G.mul(g, u);
  if (G.pow(gu, p) != G.pow(g, p)) throw PreconditionFailed("(g u)^p differs from g^p");

  // f_j = m_j g^{i_j} with m_j in M, since G/M is cyclic of order p.
  std::vector<Element> images;
  for (int j = 0; j < G.ngens(); ++j) {
    const Element f = G.generator(j);
    std::optional<Element> image;
    for (int i = 0; i < p; ++i) {
      Element m = G.mul(f, G.pow(g, -i));
      if (!M.contains(m)) continue;
      assert(!image && "coset decomposition must be unique");
      image = G.mul(m, G.pow(gu, i));
#ifdef NDEBUG
      break;
#endif
    }
    if (!image) throw PreconditionFailed("M g does not generate G modulo M");
    images.push_back(*image);
  }

  GenMap map(G, std::move(images));
  const std::string state = "M = " + describe(M.gens()) + ", g = " + to_string(g) +
                            ", u = " + to_string(u) + ", map: " + describe(map);
  std::optional<Automorphism> a;
  try {
    a = verify(std::move(map));
  } catch (const Error& e) {
    throw CertificationFailed(std::string("extension is not an automorphism (") + e.what() +
                              "); " + state);
  }
  if (!fixes_elementwise(*a, M)) throw CertificationFailed("extension moves M; " + state);
  const std::uint64_t k = aut_order(*a);
  const bool trivial = u.is_identity();
  if ((trivial && k != 1) || (!trivial && k != static_cast<std::uint64_t>(p)))
    throw CertificationFailed("extension has order " + std::to_string(k) + "; " + state);
  return *a;
}

TheoremWitness construct_theorem_witness(const PcGroup& G, WitnessOptions options) {
  const int p = G.prime();
  if (!options.bypass_hypotheses) {
    const HypothesisReport report = check_theorem_hypotheses(G);
    if (!report.theorem_applicable())
      throw PreconditionFailed("group does not satisfy the theorem hypotheses");
  }
  const Subgroup Z = center(G);
  const Subgroup Z2 = second_center(G);

  std::optional<Element> u;
  for (const auto& x : Z2.elements())
    if (!Z.contains(x) && G.pow(x, p).is_identity()) {
      u = x;
      break;
    }
  if (!u) throw NoEligibleU("every element of order p in Z_2(G) is central");

  Subgroup M = centralizer(G, *u);
  if (M.order() * static_cast<std::uint64_t>(p) != G.order().value_or(0))
    throw CentralizerNotMaximal("C_G(" + to_string(*u) + ") has order " + std::to_string(M.order()));

  std::optional<Element> g;
  for (int i = G.ngens() - 1; i >= 0; --i)
    if (!M.contains(G.generator(i))) {
      g = G.generator(i);
      break;
    }
  // Some pc generator lies outside any proper subgroup containing Phi(G).
  assert(g);

  if (!options.bypass_hypotheses && G.pow(G.mul(*g, *u), p) != G.pow(*g, p))
    throw CertificationFailed("(g u)^p != g^p for u = " + to_string(*u) + ", g = " + to_string(*g));

  Automorphism a = extend_to_automorphism(G, M, *g, *u);
  TheoremWitness w{*u, M, *g, a, false, false};
  const InnerCheck inner = is_inner(a);
  w.non_inner = !inner.inner;
  w.fixes_frattini = fixes_elementwise(a, frattini(G));
  if (!options.bypass_hypotheses) {
    if (inner.inner)
      throw InnerWitnessFound("constructed automorphism is conjugation by " + to_string(*inner.witness) +
                              "; u = " + to_string(*u) + ", g = " + to_string(*g) +
                              ", map: " + describe(a.map()));
    if (!w.fixes_frattini)
      throw CertificationFailed("constructed automorphism moves Phi(G); map: " + describe(a.map()));
  }
  return w;
}

}  // namespace pgw
