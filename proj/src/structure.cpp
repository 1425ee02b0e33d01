#include "pgw/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

using ElementSet = std::unordered_set<Element, ElementHash>;

int log_p(std::uint64_t value, int p) {
  int k = 0;
  while (value > 1) {
    value /= static_cast<std::uint64_t>(p);
    ++k;
  }
  return k;
}

// Closes `members` under right multiplication by gens.
void extend(const PcGroup& G, ElementSet& members, const std::vector<Element>& gens) {
  std::vector<Element> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (const auto& s : gens) {
      Element y = G.mul(x, s);
      if (members.insert(y).second) frontier.push_back(y);
    }
  }
  if (auto o = G.order(); o && members.size() > *o)
    throw SizeCap("closure exceeded the group order");
}

Subgroup from_elements(const PcGroup& G, const std::vector<Element>& elements) {
  return closure(G, elements);
}

}  // namespace

Subgroup::Subgroup(std::vector<Element> sorted_elements, std::vector<Element> gens)
    : elements_(std::move(sorted_elements)), gens_(std::move(gens)) {}

bool Subgroup::contains(const Element& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

namespace {

// Index-order is lexicographic order, so the sorted element list falls out of
// a scan of the membership bitmap.
Subgroup closure_indexed(const PcGroup& G, std::span<const Element> gens) {
  const auto N = static_cast<std::size_t>(*G.order());
  std::vector<char> member(N, 0);
  std::vector<std::uint32_t> members{0};
  member[0] = 1;
  std::vector<Element> kept;
  std::vector<std::uint32_t> kept_idx;
  for (const auto& s : gens) {
    const std::uint32_t si = G.index(s);
    if (member[si]) continue;
    kept.push_back(s);
    kept_idx.push_back(si);
    std::vector<std::uint32_t> frontier = members;
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (std::uint32_t g : kept_idx) {
        const std::uint32_t y = G.mul_index(x, g);
        if (member[y]) continue;
        member[y] = 1;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::vector<Element> sorted;
  sorted.reserve(members.size());
  for (std::uint32_t x = 0; x < N; ++x)
    if (member[x]) sorted.push_back(G.at(x));
  return Subgroup(std::move(sorted), std::move(kept));
}

}  // namespace

Subgroup closure(const PcGroup& G, std::span<const Element> gens) {
  if (G.indexed()) return closure_indexed(G, gens);
  ElementSet members{G.identity()};
  std::vector<Element> kept;
  for (const auto& s : gens) {
    if (members.contains(s)) continue;
    kept.push_back(s);
    extend(G, members, kept);
  }
  std::vector<Element> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  return Subgroup(std::move(sorted), std::move(kept));
}

Subgroup whole_group(const PcGroup& G) {
  std::vector<Element> gens;
  for (int i = 0; i < G.ngens(); ++i) gens.push_back(G.generator(i));
  return Subgroup(G.elements(), std::move(gens));
}

Subgroup trivial_subgroup(const PcGroup& G) { return Subgroup({G.identity()}, {}); }

namespace {

template <class Pred>
Subgroup filter(const PcGroup& G, const std::vector<Element>& pool, Pred keep) {
  std::vector<Element> out;
  for (const auto& x : pool)
    if (keep(x)) out.push_back(x);
  return from_elements(G, out);
}

bool commutes_with_all(const PcGroup& G, const Element& x, const std::vector<Element>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Element& s) { return G.mul(x, s) == G.mul(s, x); });
}

}  // namespace

Subgroup centralizer(const PcGroup& G, const Subgroup& S) {
  return filter(G, G.elements(), [&](const Element& x) { return commutes_with_all(G, x, S.gens()); });
}

Subgroup centralizer(const PcGroup& G, const Element& x) {
  return centralizer(G, closure(G, std::span<const Element>(&x, 1)));
}

Subgroup centralizer_exhaustive(const PcGroup& G, const Subgroup& S) {
  return filter(G, G.elements(),
                [&](const Element& x) { return commutes_with_all(G, x, S.elements()); });
}

Subgroup center(const PcGroup& G) { return centralizer(G, whole_group(G)); }

Subgroup center_of(const PcGroup& G, const Subgroup& H) {
  return filter(G, H.elements(), [&](const Element& x) { return commutes_with_all(G, x, H.gens()); });
}

Subgroup commutator_subgroup(const PcGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Element> gens;
  for (const auto& a : A.gens())
    for (const auto& b : B.gens()) gens.push_back(G.comm(a, b));
  std::vector<Element> conjugators = A.gens();
  conjugators.insert(conjugators.end(), B.gens().begin(), B.gens().end());

  Subgroup N = closure(G, gens);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> next = N.gens();
    for (const auto& x : N.gens())
      for (const auto& c : conjugators) {
        Element y = G.conj(x, c);
        if (!N.contains(y)) {
          next.push_back(y);
          grew = true;
        }
      }
    if (grew) N = closure(G, next);
  }
  return N;
}

Subgroup derived(const PcGroup& G) {
  Subgroup g = whole_group(G);
  return commutator_subgroup(G, g, g);
}

Subgroup agemo(const PcGroup& G) {
  std::vector<Element> powers;
  for (const auto& x : G.elements()) powers.push_back(G.pow(x, G.prime()));
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return closure(G, powers);
}

Subgroup frattini(const PcGroup& G) {
  std::vector<Element> gens = agemo(G).gens();
  const auto d = derived(G).gens();
  gens.insert(gens.end(), d.begin(), d.end());
  return closure(G, gens);
}

Subgroup frattini_of(const PcGroup& G, const Subgroup& H) {
  std::vector<Element> gens;
  for (const auto& x : H.elements()) gens.push_back(G.pow(x, G.prime()));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const auto d = commutator_subgroup(G, H, H).gens();
  gens.insert(gens.end(), d.begin(), d.end());
  return closure(G, gens);
}

bool is_abelian(const PcGroup& G, const Subgroup& H) {
  const auto& g = H.gens();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (G.mul(g[i], g[j]) != G.mul(g[j], g[i])) return false;
  return true;
}

bool is_normal_in(const PcGroup& G, const Subgroup& B, const Subgroup& A) {
  for (const auto& b : B.gens())
    for (const auto& a : A.gens())
      if (!B.contains(G.conj(b, a))) return false;
  return true;
}

bool is_normal(const PcGroup& G, const Subgroup& H) { return is_normal_in(G, H, whole_group(G)); }

CentralSeries upper_central_series(const PcGroup& G) {
  CentralSeries s{CentralSeries::Kind::Upper, {trivial_subgroup(G)}};
  const auto all = G.elements();
  std::vector<Element> gens;
  for (int i = 0; i < G.ngens(); ++i) gens.push_back(G.generator(i));
  while (s.terms.back().order() < all.size()) {
    const Subgroup& prev = s.terms.back();
    Subgroup next = filter(G, all, [&](const Element& x) {
      return std::all_of(gens.begin(), gens.end(),
                         [&](const Element& g) { return prev.contains(G.comm(x, g)); });
    });
    if (next == prev) break;  // not nilpotent; cannot happen for a p-group
    s.terms.push_back(std::move(next));
  }
  return s;
}

CentralSeries lower_central_series(const PcGroup& G) {
  Subgroup g = whole_group(G);
  CentralSeries s{CentralSeries::Kind::Lower, {g}};
  while (s.terms.back().order() > 1) {
    Subgroup next = commutator_subgroup(G, s.terms.back(), g);
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

int nilpotency_class(const PcGroup& G) {
  return static_cast<int>(lower_central_series(G).terms.size()) - 1;
}

Subgroup second_center(const PcGroup& G) {
  auto s = upper_central_series(G);
  return s.terms.size() > 2 ? s.terms[2] : s.terms.back();
}

FrattiniQuotient::FrattiniQuotient(const PcGroup& G) : group_(G), frattini_(pgw::frattini(G)) {
  Subgroup H = frattini_;
  for (int i = 0; i < G.ngens(); ++i) {
    Element f = G.generator(i);
    if (H.contains(f)) continue;
    lifts_.push_back(f);
    std::vector<Element> gens = H.gens();
    gens.push_back(f);
    H = closure(G, gens);
  }
  const int p = G.prime();
  int count = 1;
  for (int i = 0; i < rank(); ++i) count *= p;
  std::vector<int> v(static_cast<std::size_t>(rank()));
  for (int c = 0; c < count; ++c) {
    int rest = c;
    for (int i = rank() - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    Element r = lift(v);
    for (const auto& phi : frattini_.elements()) code_.emplace(G.mul(r, phi), c);
  }
  if (auto o = G.order(); o && code_.size() != *o)
    throw Error("Frattini quotient is not elementary abelian of the expected order");
}

std::vector<int> FrattiniQuotient::coords(const Element& x) const {
  const int p = group_.prime();
  int c = code_.at(x);
  std::vector<int> v(static_cast<std::size_t>(rank()));
  for (int i = rank() - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = c % p;
    c /= p;
  }
  return v;
}

Element FrattiniQuotient::lift(std::span<const int> v) const {
  Element r = group_.identity();
  for (std::size_t i = 0; i < lifts_.size(); ++i) r = group_.mul(r, group_.pow(lifts_[i], v[i]));
  return r;
}

std::vector<Subgroup> maximal_subgroups(const PcGroup& G) {
  FrattiniQuotient q(G);
  const int d = q.rank();
  const int p = G.prime();
  std::vector<Subgroup> out;
  std::vector<int> lambda(static_cast<std::size_t>(d), 0);
  // Enumerate functionals in lexicographic order, keeping the normalised ones
  // (first nonzero coordinate equal to 1).
  while (true) {
    int i = d - 1;
    while (i >= 0 && lambda[static_cast<std::size_t>(i)] == p - 1) lambda[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++lambda[static_cast<std::size_t>(i)];
    auto lead = std::find_if(lambda.begin(), lambda.end(), [](int c) { return c != 0; });
    if (*lead != 1) continue;
    const auto t = static_cast<std::size_t>(lead - lambda.begin());
    std::vector<Element> gens = q.frattini().gens();
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      if (k == t) continue;
      std::vector<int> v(static_cast<std::size_t>(d), 0);
      v[k] = 1;
      v[t] = (p - lambda[k]) % p;
      gens.push_back(q.lift(v));
    }
    out.push_back(closure(G, gens));
  }
  return out;
}

Subgroup omega1(const PcGroup& G, const Subgroup& A) {
  if (!is_abelian(G, A)) throw NotAbelian("omega1 requires an abelian subgroup");
  return filter(G, A.elements(), [&](const Element& a) { return G.pow(a, G.prime()).is_identity(); });
}

int rank(const PcGroup& G, const Subgroup& H) {
  return log_p(H.order() / frattini_of(G, H).order(), G.prime());
}

QuotientFacts quotient_facts(const PcGroup& G, const Subgroup& A, const Subgroup& B) {
  if (!B.is_subset_of(A) || !is_normal_in(G, B, A)) throw NotNormal("B is not normal in A");
  QuotientFacts f;
  f.order = A.order() / B.order();
  const int p = G.prime();
  f.elementary_abelian =
      std::all_of(A.elements().begin(), A.elements().end(),
                  [&](const Element& a) { return B.contains(G.pow(a, p)); });
  for (const auto& a : A.gens())
    for (const auto& b : A.gens())
      if (!B.contains(G.comm(a, b))) f.elementary_abelian = false;
  f.rank = f.elementary_abelian ? log_p(f.order, p) : -1;
  return f;
}

std::vector<Element> canonical_generators(const PcGroup& G, const Subgroup& H) {
  return closure(G, H.elements()).gens();
}

}  // namespace pgw
