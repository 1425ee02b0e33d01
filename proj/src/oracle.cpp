#include "pgw/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "pgw/automorphism.hpp"
#include "pgw/errors.hpp"
#include "pgw/structure.hpp"

namespace pgw {

namespace {

using Clock = std::chrono::steady_clock;

// Everything the workers share, in index form.
struct Plan {
  PcGroup group;
  int n = 0;
  int p = 0;
  int d = 0;
  std::uint32_t order = 0;
  std::vector<std::uint32_t> pow_p;            // x -> x^p
  std::vector<std::array<std::uint8_t, kMaxGenerators>> coords;  // x -> coordinates mod Phi(G)
  std::vector<std::optional<Definition>> defn;
  std::vector<std::vector<int>> lift_words;    // pc generator -> word in the lifts
  std::vector<std::pair<int, int>> comm_checks;
  std::vector<Element> comm_rhs;               // parallel to comm_checks
  std::vector<std::uint32_t> first_images;
  std::vector<std::uint32_t> other_images;
  Subgroup frattini;

  explicit Plan(const PcGroup& G) : group(G) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return group.mul_index(a, b); }
  std::uint32_t comm(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(group.inv_index(a), group.inv_index(b)), mul(a, b));
  }
  std::uint32_t eval(const std::vector<std::uint32_t>& img, const Element& x) const {
    std::uint32_t r = 0;
    for (int k = 0; k < n; ++k)
      for (int e = 0; e < x[k]; ++e) r = mul(r, img[static_cast<std::size_t>(k)]);
    return r;
  }
};

std::vector<std::vector<int>> words_in_lifts(const PcGroup& G, const std::vector<Element>& lifts) {
  // Breadth-first spanning tree of the Cayley graph for right multiplication
  // by the lifts; each pc generator reads its word off the tree.
  const std::uint32_t N = static_cast<std::uint32_t>(*G.order());
  std::vector<std::int32_t> parent(N, -1), via(N, -1);
  std::vector<std::uint32_t> queue{0};
  parent[0] = 0;
  std::vector<std::uint32_t> lift_idx;
  for (const auto& x : lifts) lift_idx.push_back(G.index(x));
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t x = queue[h];
    for (std::size_t k = 0; k < lift_idx.size(); ++k) {
      const std::uint32_t y = G.mul_index(x, lift_idx[k]);
      if (parent[y] >= 0) continue;
      parent[y] = static_cast<std::int32_t>(x);
      via[y] = static_cast<std::int32_t>(k);
      queue.push_back(y);
    }
  }
  if (queue.size() != N) throw InputError("oracle lifts do not generate the group");
  std::vector<std::vector<int>> words;
  for (int i = 0; i < G.ngens(); ++i) {
    std::vector<int> w;
    for (std::uint32_t y = G.index(G.generator(i)); y != 0; y = static_cast<std::uint32_t>(parent[y]))
      w.push_back(via[y]);
    std::reverse(w.begin(), w.end());
    words.push_back(std::move(w));
  }
  return words;
}

Plan make_plan(const PcGroup& G, const OracleOptions& options) {
  if (!G.indexed()) throw SizeCap("the automorphism oracle needs a multiplication table");
  Plan plan(G);
  plan.n = G.ngens();
  plan.p = G.prime();
  plan.order = static_cast<std::uint32_t>(*G.order());
  FrattiniQuotient q(G);
  plan.frattini = q.frattini();

  if (options.lifts) {
    plan.d = static_cast<int>(options.lifts->size());
    plan.lift_words = words_in_lifts(G, *options.lifts);
  } else {
    plan.d = G.minimal_count();
    for (int i = plan.d; i < plan.n; ++i)
      if (!G.presentation().defn[static_cast<std::size_t>(i)])
        throw MissingDefinitions("generator f" + std::to_string(i + 1) + " has no definition");
    if (plan.d != q.rank())
      throw MissingDefinitions("the undefined generators do not form a minimal generating set");
    plan.defn = G.presentation().defn;
  }

  plan.pow_p.resize(plan.order);
  plan.coords.resize(plan.order);
  for (std::uint32_t x = 0; x < plan.order; ++x) {
    const Element e = G.at(x);
    plan.pow_p[x] = G.index(G.pow(e, plan.p));
    const auto c = q.coords(e);
    plan.coords[x] = {};
    for (std::size_t k = 0; k < c.size(); ++k) plan.coords[x][k] = static_cast<std::uint8_t>(c[k]);
  }
  for (int i = 0; i < plan.n; ++i)
    for (int j = 0; j < i; ++j) {
      plan.comm_checks.emplace_back(i, j);
      plan.comm_rhs.push_back(G.commutator_relation(i, j));
    }
  for (std::uint32_t x = 0; x < plan.order; ++x) {
    const bool nonzero = std::any_of(plan.coords[x].begin(), plan.coords[x].end(), [](int c) { return c; });
    if (!options.prune || nonzero) plan.first_images.push_back(x);
    if (!options.prune || nonzero) plan.other_images.push_back(x);
  }
  return plan;
}

using Coords = std::array<std::uint8_t, kMaxGenerators>;

// Incremental row reduction over F_p for the pruning test.
class Independence {
 public:
  Independence(int p, int d) : p_(p), d_(d) {}

  bool push(Coords v) {
    for (std::size_t r = 0; r < size_; ++r) {
      const auto& [pivot, row] = rows_[r];
      const int c = v[pivot];
      if (c == 0) continue;
      for (int k = 0; k < d_; ++k)
        v[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(
            (v[static_cast<std::size_t>(k)] + (p_ - c) * row[static_cast<std::size_t>(k)]) % p_);
    }
    int pivot = 0;
    while (pivot < d_ && v[static_cast<std::size_t>(pivot)] == 0) ++pivot;
    if (pivot == d_) return false;
    int inv = 1;
    while ((inv * v[static_cast<std::size_t>(pivot)]) % p_ != 1) ++inv;
    for (int k = 0; k < d_; ++k)
      v[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((v[static_cast<std::size_t>(k)] * inv) % p_);
    rows_[size_++] = {static_cast<std::size_t>(pivot), v};
    return true;
  }
  void pop() { --size_; }

 private:
  int p_, d_;
  std::array<std::pair<std::size_t, Coords>, kMaxGenerators> rows_{};
  std::size_t size_ = 0;
};

struct Tally {
  AutCount count;
  std::uint64_t since_clock_check = 0;
};

class Worker {
 public:
  Worker(const Plan& plan, const OracleOptions& options, const InnerTester& inner,
         Clock::time_point start, std::atomic<bool>& stop)
      : plan_(plan), options_(options), inner_(inner), start_(start), stop_(stop),
        images_(static_cast<std::size_t>(plan.n)), independence_(plan.p, plan.d) {}

  void run_first(std::uint32_t first) {
    if (options_.prune) independence_.push(plan_.coords[first]);
    tuple_.assign(1, first);
    descend();
    if (options_.prune) independence_.pop();
  }

  Tally tally;

 private:
  void descend() {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (static_cast<int>(tuple_.size()) == plan_.d) {
      examine();
      return;
    }
    for (std::uint32_t x : plan_.other_images) {
      if (options_.prune && !independence_.push(plan_.coords[x])) continue;
      tuple_.push_back(x);
      descend();
      tuple_.pop_back();
      if (options_.prune) independence_.pop();
    }
  }

  void examine() {
    ++tally.count.candidates;
    if (++tally.since_clock_check == 4096) {
      tally.since_clock_check = 0;
      if (options_.budget_seconds &&
          std::chrono::duration<double>(Clock::now() - start_).count() > *options_.budget_seconds) {
        stop_ = true;
        throw Timeout("automorphism enumeration exceeded its budget");
      }
    }
    const int n = plan_.n;
    if (plan_.lift_words.empty()) {
      for (int i = 0; i < plan_.d; ++i) images_[static_cast<std::size_t>(i)] = tuple_[static_cast<std::size_t>(i)];
      for (int i = plan_.d; i < n; ++i) {
        const Definition& def = *plan_.defn[static_cast<std::size_t>(i)];
        images_[static_cast<std::size_t>(i)] =
            def.kind == Definition::Kind::Power
                ? plan_.pow_p[images_[static_cast<std::size_t>(def.j)]]
                : plan_.comm(images_[static_cast<std::size_t>(def.j)], images_[static_cast<std::size_t>(def.k)]);
      }
    } else {
      for (int i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (int k : plan_.lift_words[static_cast<std::size_t>(i)]) r = plan_.mul(r, tuple_[static_cast<std::size_t>(k)]);
        images_[static_cast<std::size_t>(i)] = r;
      }
    }
    // Cheapest relations first; most candidates fail an early commutator.
    for (std::size_t c = 0; c < plan_.comm_checks.size(); ++c) {
      const auto [i, j] = plan_.comm_checks[c];
      if (plan_.comm(images_[static_cast<std::size_t>(i)], images_[static_cast<std::size_t>(j)]) !=
          plan_.eval(images_, plan_.comm_rhs[c]))
        return;
    }
    for (int i = 0; i < n; ++i)
      if (plan_.pow_p[images_[static_cast<std::size_t>(i)]] != plan_.eval(images_, plan_.group.power_relation(i)))
        return;

    std::vector<Element> elements;
    for (auto x : images_) elements.push_back(plan_.group.at(x));
    std::optional<Automorphism> a;
    try {
      a = verify(GenMap(plan_.group, elements));
    } catch (const NotSurjective&) {
      return;
    }
    ++tally.count.total;
    if (inner_.check(*a).inner) {
      ++tally.count.inner;
    } else if (aut_order(*a) == static_cast<std::uint64_t>(plan_.p) &&
               fixes_elementwise(*a, plan_.frattini)) {
      ++tally.count.order_p_noninner_fixing_frattini;
      tally.count.bucket.push_back(elements);
    }
    if (options_.keep_automorphisms) tally.count.automorphisms.push_back(std::move(elements));
  }

  const Plan& plan_;
  const OracleOptions& options_;
  const InnerTester& inner_;
  Clock::time_point start_;
  std::atomic<bool>& stop_;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> tuple_;
  Independence independence_;
};

}  // namespace

AutCount enumerate_automorphisms(const PcGroup& G, const OracleOptions& options) {
  const auto start = Clock::now();
  const Plan plan = make_plan(G, options);
  const InnerTester inner(G);
  const int jobs = std::max(1, options.jobs);

  std::atomic<bool> stop{false};
  std::vector<Worker> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) workers.emplace_back(plan, options, inner, start, stop);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));

  auto body = [&](int t) {
    try {
      for (std::size_t i = static_cast<std::size_t>(t); i < plan.first_images.size(); i += static_cast<std::size_t>(jobs))
        workers[static_cast<std::size_t>(t)].run_first(plan.first_images[i]);
    } catch (...) {
      stop = true;
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(body, t);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  AutCount total;
  for (auto& w : workers) {
    auto& c = w.tally.count;
    total.total += c.total;
    total.inner += c.inner;
    total.order_p_noninner_fixing_frattini += c.order_p_noninner_fixing_frattini;
    total.candidates += c.candidates;
    total.automorphisms.insert(total.automorphisms.end(), c.automorphisms.begin(), c.automorphisms.end());
    total.bucket.insert(total.bucket.end(), c.bucket.begin(), c.bucket.end());
  }
  std::sort(total.automorphisms.begin(), total.automorphisms.end());
  std::sort(total.bucket.begin(), total.bucket.end());
  total.elapsed = Clock::now() - start;
  return total;
}

bool cross_validate(const PcGroup& G, const OracleOptions& options) {
  OracleOptions opts = options;
  opts.keep_automorphisms = true;
  return cross_validate(G, enumerate_automorphisms(G, opts));
}

bool cross_validate(const PcGroup& G, const AutCount& count) {
  if (count.automorphisms.size() != count.total)
    throw Mismatch("cross-validation needs every automorphism; enumerate with keep_automorphisms");
  const std::uint64_t expected_inner = *G.order() / center(G).order();
  if (count.inner != expected_inner)
    throw Mismatch("oracle found " + std::to_string(count.inner) + " inner automorphisms, |G/Z(G)| = " +
                   std::to_string(expected_inner));

  const InnerTester inner(G);
  std::uint64_t witnessed = 0;
  for (const auto& images : count.automorphisms) {
    const Automorphism a = verify(GenMap(G, images));
    const InnerCheck c = inner.check(a);
    if (!c.inner) continue;
    ++witnessed;
    for (int i = 0; i < G.ngens(); ++i)
      if (G.conj(G.generator(i), *c.witness) != images[static_cast<std::size_t>(i)])
        throw Mismatch("inner witness " + to_string(*c.witness) + " does not conjugate f" +
                       std::to_string(i + 1) + " correctly");
  }
  if (witnessed != count.inner) throw Mismatch("inner classification differs between passes");

  std::optional<TheoremWitness> w;
  try {
    w = construct_theorem_witness(G);
  } catch (const PreconditionFailed&) {
  } catch (const NoEligibleU&) {
  } catch (const CentralizerNotMaximal&) {
  }
  if (w && !std::binary_search(count.bucket.begin(), count.bucket.end(), w->automorphism.images()))
    throw Mismatch("constructed witness is missing from the oracle's order-p non-inner bucket");
  return true;
}

}  // namespace pgw
