#pragma once

// Helpers shared by the test suites. The brute-force routines here work only
// from the multiplication of the group and never call the structure or
// automorphism code they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pgw/ingest.hpp"
#include "pgw/pc.hpp"
#include "pgw/structure.hpp"

namespace testing {

using pgw::Element;
using pgw::PcGroup;

inline std::vector<std::string> corpus_keys() {
  std::vector<std::string> keys;
  for (const auto& e : pgw::builtin_corpus()) keys.emplace_back(e.key);
  return keys;
}

inline PcGroup group(std::string_view key) { return pgw::builtin(key).group; }

inline Element word(const PcGroup& G, std::string_view w) { return pgw::parse_element(G, w); }

inline std::vector<Element> as_set(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Full Cayley table over the enumerated elements.
struct Table {
  std::vector<Element> elems;
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::uint32_t> inv;
  std::uint32_t identity = 0;

  explicit Table(const PcGroup& G) : elems(G.elements()) {
    const auto N = elems.size();
    mul.assign(N, std::vector<std::uint32_t>(N));
    inv.assign(N, 0);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) mul[a][b] = idx(G.mul(elems[a], elems[b]));
    for (std::size_t a = 0; a < N; ++a) {
      if (elems[a].is_identity()) identity = static_cast<std::uint32_t>(a);
    }
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (mul[a][b] == identity) inv[a] = static_cast<std::uint32_t>(b);
  }

  std::uint32_t idx(const Element& x) const {
    return static_cast<std::uint32_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  }
  std::size_t size() const { return elems.size(); }

  std::uint32_t comm(std::uint32_t a, std::uint32_t b) const {
    return mul[mul[inv[a]][inv[b]]][mul[a][b]];
  }

  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> gens) const {
    std::vector<char> in(size(), 0);
    std::vector<std::uint32_t> out{identity};
    in[identity] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto g : gens) {
        const auto y = mul[out[i]][g];
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Element> to_elements(const std::vector<std::uint32_t>& s) const {
    std::vector<Element> out;
    for (auto i : s) out.push_back(elems[i]);
    return as_set(out);
  }

  std::vector<Element> center() const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t a = 0; a < size(); ++a) {
      bool central = true;
      for (std::uint32_t b = 0; b < size() && central; ++b) central = mul[a][b] == mul[b][a];
      if (central) z.push_back(a);
    }
    return to_elements(z);
  }

  std::vector<Element> centralizer(const std::vector<Element>& S) const {
    std::vector<std::uint32_t> c;
    for (std::uint32_t a = 0; a < size(); ++a) {
      bool ok = true;
      for (const auto& s : S) {
        const auto b = idx(s);
        if (mul[a][b] != mul[b][a]) {
          ok = false;
          break;
        }
      }
      if (ok) c.push_back(a);
    }
    return to_elements(c);
  }

  std::vector<Element> derived() const {
    std::vector<std::uint32_t> cs;
    for (std::uint32_t a = 0; a < size(); ++a)
      for (std::uint32_t b = 0; b < size(); ++b) cs.push_back(comm(a, b));
    return to_elements(closure(as_unique(cs)));
  }

  std::vector<Element> agemo(int p) const {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t a = 0; a < size(); ++a) {
      std::uint32_t x = identity;
      for (int k = 0; k < p; ++k) x = mul[x][a];
      ps.push_back(x);
    }
    return to_elements(closure(as_unique(ps)));
  }

  std::vector<Element> second_center() const {
    const auto Z = center();
    std::vector<std::uint32_t> z2;
    for (std::uint32_t a = 0; a < size(); ++a) {
      bool ok = true;
      for (std::uint32_t b = 0; b < size() && ok; ++b)
        ok = std::binary_search(Z.begin(), Z.end(), elems[comm(a, b)]);
      if (ok) z2.push_back(a);
    }
    return to_elements(z2);
  }

  bool is_subgroup(const std::vector<Element>& S) const {
    for (const auto& a : S)
      for (const auto& b : S)
        if (!std::binary_search(S.begin(), S.end(), elems[mul[idx(a)][idx(b)]])) return false;
    return !S.empty();
  }

  /// Kernels of the non-zero homomorphisms to Z/p, i.e. every subgroup of
  /// index p. A candidate assigns c_i to f_i and sends the normal form
  /// f_1^e_1...f_n^e_n to sum e_i c_i; it is kept when additive on all pairs.
  std::vector<std::vector<Element>> index_p_subgroups(int p) const {
    const int n = elems.front().size();
    std::vector<std::vector<Element>> out;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto value = [&](std::uint32_t x) {
      int v = 0;
      for (int i = 0; i < n; ++i) v += elems[x][i] * c[static_cast<std::size_t>(i)];
      return v % p;
    };
    std::uint64_t combos = 1;
    for (int i = 0; i < n; ++i) combos *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 1; code < combos; ++code) {
      std::uint64_t r = code;
      for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint64_t>(p));
        r /= static_cast<std::uint64_t>(p);
      }
      std::vector<int> val(size());
      for (std::uint32_t x = 0; x < size(); ++x) val[x] = value(x);
      bool hom = true;
      for (std::uint32_t a = 0; a < size() && hom; ++a)
        for (std::uint32_t b = 0; b < size() && hom; ++b) hom = val[mul[a][b]] == (val[a] + val[b]) % p;
      if (!hom) continue;
      std::vector<Element> ker;
      for (std::uint32_t x = 0; x < size(); ++x)
        if (val[x] == 0) ker.push_back(elems[x]);
      out.push_back(ker);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static std::vector<std::uint32_t> as_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

/// Number of automorphisms, by extending every tuple of images of the given
/// generators along the Cayley graph and checking the result on all pairs.
/// Also returns how many are conjugations.
struct BruteAutCount {
  std::uint64_t total = 0;
  std::uint64_t inner = 0;
};

inline BruteAutCount brute_automorphisms(const Table& T, const std::vector<Element>& gens) {
  const auto N = T.size();
  std::vector<std::uint32_t> g;
  for (const auto& x : gens) g.push_back(T.idx(x));
  // conjugation maps, as full permutations
  std::vector<std::vector<std::uint32_t>> conj_maps;
  for (std::uint32_t t = 0; t < N; ++t) {
    std::vector<std::uint32_t> m(N);
    for (std::uint32_t x = 0; x < N; ++x) m[x] = T.mul[T.mul[T.inv[t]][x]][t];
    conj_maps.push_back(std::move(m));
  }
  std::sort(conj_maps.begin(), conj_maps.end());
  conj_maps.erase(std::unique(conj_maps.begin(), conj_maps.end()), conj_maps.end());

  BruteAutCount out;
  std::vector<std::uint32_t> img(g.size(), 0);
  std::vector<std::uint32_t> phi(N);
  std::vector<char> set(N);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < g.size()) {
      for (std::uint32_t y = 0; y < N; ++y) {
        img[k] = y;
        rec(k + 1);
      }
      return;
    }
    std::fill(set.begin(), set.end(), 0);
    phi[T.identity] = T.identity;
    set[T.identity] = 1;
    std::vector<std::uint32_t> queue{T.identity};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto x = queue[q];
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto y = T.mul[x][g[i]];
        const auto v = T.mul[phi[x]][img[i]];
        if (set[y]) {
          if (phi[y] != v) return;
        } else {
          set[y] = 1;
          phi[y] = v;
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != N) return;
    std::vector<char> hit(N, 0);
    for (auto v : phi) {
      if (hit[v]) return;
      hit[v] = 1;
    }
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (phi[T.mul[a][b]] != T.mul[phi[a]][phi[b]]) return;
    ++out.total;
    if (std::binary_search(conj_maps.begin(), conj_maps.end(), phi)) ++out.inner;
  };
  rec(0);
  return out;
}

inline Element random_element(const PcGroup& G, std::mt19937_64& rng) {
  Element x = G.identity();
  std::uniform_int_distribution<int> d(0, G.prime() - 1);
  for (int i = 0; i < G.ngens(); ++i) x.set(i, d(rng));
  return x;
}

inline std::vector<Element> sorted(const pgw::Subgroup& H) { return H.elements(); }

}  // namespace testing
