// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pgw/automorphism.hpp"
#include "pgw/errors.hpp"
#include "pgw/hypothesis.hpp"
#include "pgw/ingest.hpp"
#include "pgw/oracle.hpp"
#include "pgw/report.hpp"
#include "pgw/structure.hpp"

using namespace pgw;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::string> corpus() {
  std::vector<std::string> keys;
  for (const auto& e : builtin_corpus()) keys.emplace_back(e.key);
  return keys;
}

Element random_element(const PcGroup& G, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, G.prime() - 1);
  Element x = G.identity();
  for (int i = 0; i < G.ngens(); ++i) x.set(i, d(rng));
  return x;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

template <class F>
Outcome guarded(F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  return o;
}

Outcome example_reproduction() {
  return guarded([](Outcome& o) {
    const auto start = Clock::now();
    const PcGroup G = builtin(kExampleGroupKey).group;
    for (const auto& c : check_example_group(G)) o.require(c.passed, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    const HypothesisReport h = check_theorem_hypotheses(G);
    o.require(h.zm_condition, "zm condition");
    const TheoremWitness w = construct_theorem_witness(G);
    o.require(aut_order(w.automorphism) == 3, "witness order 3");
    o.require(!is_inner(w.automorphism).inner, "witness non-inner");
    o.require(fixes_every_element(w.automorphism, frattini(G)), "witness fixes Phi(G) at every element");
    const double t = seconds_since(start);
    o.require(t <= 60.0, "runtime " + std::to_string(t) + " s exceeds 60 s");
    o.notes.push_back("runtime " + std::to_string(t) + " s");
  });
}

Outcome oracle_count(AutCount& count) {
  return guarded([&](Outcome& o) {
    const PcGroup G = builtin(kExampleGroupKey).group;
    OracleOptions opts;
    opts.budget_seconds = 600;
    opts.keep_automorphisms = true;
    count = enumerate_automorphisms(G, opts);
    o.require(count.total == 4374, "total = " + std::to_string(count.total));
    o.require(count.inner == 729, "inner = " + std::to_string(count.inner));
    o.require(count.elapsed.count() <= 600.0, "enumeration exceeded 10 minutes");
    o.notes.push_back("total " + std::to_string(count.total) + ", inner " + std::to_string(count.inner) + ", " +
                      std::to_string(count.elapsed.count()) + " s");
  });
}

Outcome universal_invariants() {
  return guarded([](Outcome& o) {
    std::mt19937_64 rng(2024);
    for (const auto& key : corpus()) {
      const PcGroup G = builtin(key).group;
      const Subgroup Z = center(G), Z2 = second_center(G), D = derived(G);
      o.require(commutator_subgroup(G, Z2, D) == trivial_subgroup(G), key + ": [Z2, G'] = 1");

      std::uint64_t e = 1;
      for (const auto& z : Z.elements()) e = std::max(e, G.element_order(z));
      bool bound = true;
      for (const auto& g : Z2.elements()) bound = bound && Z.contains(G.pow(g, static_cast<long>(e)));
      o.require(bound, key + ": g^exp(Z) in Z for g in Z2");

      const Subgroup phi = frattini(G);
      std::vector<Element> pd = agemo(G).elements();
      pd.insert(pd.end(), D.elements().begin(), D.elements().end());
      o.require(closure(G, pd) == phi, key + ": Phi = G^p G'");
      const auto maximals = maximal_subgroups(G);
      std::vector<Element> meet = whole_group(G).elements();
      for (const auto& M : maximals) {
        std::vector<Element> next;
        std::set_intersection(meet.begin(), meet.end(), M.elements().begin(), M.elements().end(),
                              std::back_inserter(next));
        meet = std::move(next);
      }
      o.require(meet == phi.elements(), key + ": Phi = intersection of maximal subgroups");
      const auto p = static_cast<std::uint64_t>(G.prime());
      const int d = rank(G, whole_group(G));
      o.require(maximals.size() == (ipow(p, d) - 1) / (p - 1), key + ": number of maximal subgroups");

      const auto& z2 = Z2.elements();
      std::uniform_int_distribution<std::size_t> pick(0, z2.size() - 1);
      std::uniform_int_distribution<int> pick_n(1, 2 * G.prime());
      bool power_identity = true, commutator_identity = true;
      for (int s = 0; s < 500; ++s) {
        const Element x = z2[pick(rng)];
        const Element y = random_element(G, rng);
        const int n = pick_n(rng);
        power_identity = power_identity && G.pow(G.mul(x, y), n) ==
                                 G.mul(G.mul(G.pow(x, n), G.pow(y, n)), G.pow(G.comm(y, x), n * (n - 1) / 2));
        const Element c = G.comm(G.pow(x, n), y);
        commutator_identity = commutator_identity && c == G.pow(G.comm(x, y), n) && c == G.comm(x, G.pow(y, n));
      }
      o.require(power_identity, key + ": (xy)^n = x^n y^n [y,x]^(n(n-1)/2)");
      o.require(commutator_identity, key + ": [x^n,y] = [x,y]^n = [x,y^n]");
    }
  });
}

Outcome extension_suite() {
  return guarded([](Outcome& o) {
    std::mt19937_64 rng(77);
    for (const auto& key : corpus()) {
      const PcGroup G = builtin(key).group;
      if (G.prime() == 2) {
        o.notes.push_back(key + " skipped: p = 2 control group, outside the odd-prime corpus");
        continue;
      }
      const int p = G.prime();
      const auto maximals = maximal_subgroups(G);
      std::vector<Subgroup> centres;
      for (const auto& M : maximals) centres.push_back(center_of(G, M));
      std::size_t tested = 0;
      auto run = [&](std::size_t mi, const Element& g, const Element& u) {
        const Subgroup& M = maximals[mi];
        if (G.pow(G.mul(g, u), p) != G.pow(g, p)) return false;
        const Automorphism a = extend_to_automorphism(G, M, g, u);
        const auto ord = aut_order(a);
        o.require(fixes_every_element(a, M), key + ": extension fixes M");
        o.require(ord == 1 || ord == static_cast<std::uint64_t>(p), key + ": order divides p");
        o.require(a(g) == G.mul(g, u), key + ": g -> g u");
        ++tested;
        return true;
      };
      if (*G.order() <= 81) {
        for (std::size_t mi = 0; mi < maximals.size(); ++mi)
          for (const auto& g : G.elements())
            if (!maximals[mi].contains(g))
              for (const auto& u : centres[mi].elements()) run(mi, g, u);
      } else {
        std::uniform_int_distribution<std::size_t> pm(0, maximals.size() - 1);
        std::size_t attempts = 0;
        while (tested < 200 && attempts < 200000) {
          ++attempts;
          const std::size_t mi = pm(rng);
          const Element g = random_element(G, rng);
          if (maximals[mi].contains(g)) continue;
          const auto& zm = centres[mi].elements();
          std::uniform_int_distribution<std::size_t> pu(0, zm.size() - 1);
          run(mi, g, zm[pu(rng)]);
        }
        o.require(tested >= 200, key + ": only " + std::to_string(tested) + " valid triples sampled");
      }
      o.notes.push_back(key + ": " + std::to_string(tested) + " triples");
    }
  });
}

Outcome cross_validation(const AutCount& example) {
  return guarded([&](Outcome& o) {
    for (const auto& key : corpus()) {
      const PcGroup G = builtin(key).group;
      const std::uint64_t expected = *G.order() / center(G).order();
      if (key == kExampleGroupKey) {
        o.require(example.inner == expected, key + ": inner = |G/Z(G)|");
        o.require(cross_validate(G, example), key + ": cross-validation");
        continue;
      }
      OracleOptions opts;
      opts.keep_automorphisms = true;
      const AutCount c = enumerate_automorphisms(G, opts);
      o.require(c.inner == expected, key + ": inner = |G/Z(G)|");
      o.require(cross_validate(G, c), key + ": cross-validation");
      if (*G.order() <= 81) {
        OracleOptions full = opts;
        full.prune = false;
        const AutCount u = enumerate_automorphisms(G, full);
        o.require(u.total == c.total && u.inner == c.inner && u.automorphisms == c.automorphisms,
                  key + ": pruned and unpruned enumerations agree");
      }
      if (key == "c9") {
        int totient = 0;
        for (int k = 1; k <= 9; ++k) totient += std::gcd(k, 9) == 1;
        o.require(c.total == static_cast<std::uint64_t>(totient), "c9: total = phi(9) = 6");
      }
    }
  });
}

Outcome determinism() {
  return guarded([](Outcome& o) {
    const GroupFile ex = builtin(kExampleGroupKey);
    RunOptions one, eight;
    one.with_oracle = eight.with_oracle = true;
    eight.jobs = 8;
    const std::string a = render_json(run_construct(ex, one), false);
    const std::string b = render_json(run_construct(ex, one), false);
    const std::string c = render_json(run_construct(ex, eight), false);
    o.require(a == b, "two runs on the example group differ");
    o.require(a == c, "--jobs 1 and --jobs 8 differ on the example group");
    for (const auto& key : corpus()) {
      const GroupFile g = builtin(key);
      const std::string x = render_json(run_check(g, one), false);
      const std::string y = render_json(run_check(g, eight), false);
      o.require(x == y, key + ": --jobs 1 and --jobs 8 differ");
    }
  });
}

}  // namespace

int main() {
  AutCount example;
  const std::vector<std::pair<std::string, Outcome>> results = {
      {"1 example group reproduction", example_reproduction()},
      {"2 oracle count 4374 / 729", oracle_count(example)},
      {"3 universal invariants over the corpus", universal_invariants()},
      {"4 extension from maximal subgroups", extension_suite()},
      {"5 oracle cross-validation", cross_validation(example)},
      {"6 report determinism", determinism()},
  };
  bool all = true;
  for (const auto& [name, r] : results) {
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << name << "\n";
    for (const auto& n : r.notes) std::cout << "      " << n << "\n";
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
