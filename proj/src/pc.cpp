#include "pgw/pc.hpp"

#include <algorithm>
#include <limits>

#include "pgw/errors.hpp"

namespace pgw {

Element::Element(int n, std::initializer_list<int> exps) : n_(static_cast<std::uint8_t>(n)) {
  int i = 0;
  for (int v : exps) {
    if (i >= n) break;
    set(i++, v);
  }
}

bool Element::is_identity() const {
  return std::all_of(e_.begin(), e_.begin() + n_, [](std::uint8_t v) { return v == 0; });
}

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : x.exponents()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

PcPresentation PcPresentation::trivial(std::string name, int p, int n) {
  PcPresentation P;
  P.name = std::move(name);
  P.p = p;
  P.n = n;
  P.power.assign(static_cast<std::size_t>(n), Word{});
  P.defn.assign(static_cast<std::size_t>(n), std::nullopt);
  return P;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string to_string(const Element& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'f' + std::to_string(i + 1);
    if (x[i] != 1) out += '^' + std::to_string(x[i]);
  }
  return out.empty() ? "1" : out;
}

struct PcGroup::Impl {
  PcPresentation pres;
  int p = 0;
  int n = 0;
  int minimal = 0;
  std::vector<Element> power;
  std::vector<Element> comm;  // n*n, entry i*n+j for i > j
  std::vector<char> comm_trivial;
  std::vector<Element> gen_inv;
  std::optional<std::uint64_t> order;

  std::vector<std::uint32_t> place;
  std::vector<std::uint16_t> table;
  std::vector<std::uint16_t> inv_table;

  const Element& comm_at(int i, int j) const { return comm[static_cast<std::size_t>(i * n + j)]; }
  bool comm_is_trivial(int i, int j) const {
    return comm_trivial[static_cast<std::size_t>(i * n + j)] != 0;
  }

  Element gen(int i) const {
    Element x(n);
    x.set(i, 1);
    return x;
  }

  // x <- x * f_g. The tail above g is conjugated past f_g using
  // f_k^{f_g} = f_k [f_k, f_g].
  void mul_gen(Element& x, int g) const {
    bool tail_commutes = true;
    for (int k = g + 1; k < n; ++k) {
      if (x[k] != 0 && !comm_is_trivial(k, g)) {
        tail_commutes = false;
        break;
      }
    }
    if (tail_commutes && x[g] + 1 < p) {
      x.set(g, x[g] + 1);
      return;
    }
    Element tail(n);
    for (int k = g + 1; k < n; ++k) {
      tail.set(k, x[k]);
      x.set(k, 0);
    }
    if (x[g] + 1 < p) {
      x.set(g, x[g] + 1);
    } else {
      x.set(g, 0);
      mul_nf(x, power[static_cast<std::size_t>(g)]);
    }
    for (int k = g + 1; k < n; ++k) {
      for (int r = 0; r < tail[k]; ++r) {
        mul_gen(x, k);
        if (!comm_is_trivial(k, g)) mul_nf(x, comm_at(k, g));
      }
    }
  }

  void mul_nf(Element& x, const Element& y) const {
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < y[i]; ++r) mul_gen(x, i);
  }

  Element inv_slow(const Element& a) const {
    Element r(n);
    for (int k = n - 1; k >= 0; --k)
      for (int c = 0; c < a[k]; ++c) mul_nf(r, gen_inv[static_cast<std::size_t>(k)]);
    return r;
  }

  std::uint32_t index(const Element& x) const {
    std::uint32_t idx = 0;
    for (int i = 0; i < n; ++i) idx += static_cast<std::uint32_t>(x[i]) * place[static_cast<std::size_t>(i)];
    return idx;
  }

  Element at(std::uint32_t idx) const {
    Element x(n);
    for (int i = 0; i < n; ++i) {
      x.set(i, static_cast<int>(idx / place[static_cast<std::size_t>(i)]));
      idx %= place[static_cast<std::size_t>(i)];
    }
    return x;
  }

  void check_structure() const;
  void check_weights() const;
  void load_relations();
  void check_consistency() const;
  void check_definitions() const;
  void build_inverses();
  void build_table();
};

namespace {

std::string gen_name(int i) { return "f" + std::to_string(i + 1); }

void check_word(const Word& w, int p, int n, const std::string& where) {
  int last = -1;
  for (const auto& l : w) {
    if (l.gen < 0 || l.gen >= n)
      throw InvalidPresentation(where + ": generator index out of range");
    if (l.gen <= last)
      throw InvalidPresentation(where + ": generators must be strictly increasing");
    if (l.exp < 1 || l.exp >= p)
      throw InvalidPresentation(where + ": exponent must lie in [1, p)");
    last = l.gen;
  }
}

Element word_vector(const Word& w, int n) {
  Element x(n);
  for (const auto& l : w) x.set(l.gen, static_cast<int>(l.exp));
  return x;
}

}  // namespace

void PcGroup::Impl::check_structure() const {
  if (!is_prime(p)) throw InvalidPresentation("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw InvalidPresentation("p exceeds " + std::to_string(kMaxPrime));
  if (n < 1 || n > kMaxGenerators)
    throw InvalidPresentation("n must lie in [1, " + std::to_string(kMaxGenerators) + "]");
  if (pres.power.size() != static_cast<std::size_t>(n) || pres.defn.size() != static_cast<std::size_t>(n))
    throw InvalidPresentation("relation tables do not match n");
  for (int i = 0; i < n; ++i)
    check_word(pres.power[static_cast<std::size_t>(i)], p, n, "power relation of " + gen_name(i));
  for (const auto& [key, w] : pres.comm) {
    auto [i, j] = key;
    if (!(0 <= j && j < i && i < n))
      throw InvalidPresentation("commutator relation [" + gen_name(i) + ", " + gen_name(j) +
                                "] needs i > j");
    check_word(w, p, n, "commutator relation [" + gen_name(i) + ", " + gen_name(j) + "]");
  }
  for (int i = 0; i < n; ++i) {
    const auto& d = pres.defn[static_cast<std::size_t>(i)];
    if (!d) continue;
    bool ok = d->j >= 0 && d->j < i;
    if (d->kind == Definition::Kind::Commutator) ok = ok && d->k >= 0 && d->k < i;
    if (!ok) throw BadDefinition("definition of " + gen_name(i) + " must use earlier generators");
  }
}

void PcGroup::Impl::check_weights() const {
  for (int i = 0; i < n; ++i)
    for (const auto& l : pres.power[static_cast<std::size_t>(i)])
      if (l.gen <= i)
        throw BadWeight("power relation of " + gen_name(i) + " mentions " + gen_name(l.gen));
  for (const auto& [key, w] : pres.comm)
    for (const auto& l : w)
      if (l.gen <= key.first)
        throw BadWeight("commutator relation [" + gen_name(key.first) + ", " +
                        gen_name(key.second) + "] mentions " + gen_name(l.gen));
}

void PcGroup::Impl::load_relations() {
  power.clear();
  for (const auto& w : pres.power) power.push_back(word_vector(w, n));
  comm.assign(static_cast<std::size_t>(n * n), Element(n));
  comm_trivial.assign(static_cast<std::size_t>(n * n), 1);
  for (const auto& [key, w] : pres.comm) {
    auto idx = static_cast<std::size_t>(key.first * n + key.second);
    comm[idx] = word_vector(w, n);
    comm_trivial[idx] = comm[idx].is_identity() ? 1 : 0;
  }
}

void PcGroup::Impl::check_consistency() const {
  auto fail = [](int i, int j, int k, const std::string& what) {
    throw ConsistencyViolation(i + 1, j + 1, k + 1, what);
  };
  // f_k (f_j f_i) = (f_k f_j) f_i
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Element lhs = gen(k);
        mul_gen(lhs, j);
        mul_gen(lhs, i);
        Element ji = gen(j);
        mul_gen(ji, i);
        Element rhs = gen(k);
        mul_nf(rhs, ji);
        if (lhs != rhs) fail(k, j, i, "associativity of f_k f_j f_i");
      }
  for (int i = 0; i < n; ++i) {
    // f_i^p f_i = f_i f_i^p
    Element lhs = power[static_cast<std::size_t>(i)];
    mul_gen(lhs, i);
    Element rhs = gen(i);
    mul_nf(rhs, power[static_cast<std::size_t>(i)]);
    if (lhs != rhs) fail(i, i, i, "f_i^p commutes with f_i");
    for (int j = i + 1; j < n; ++j) {
      // (f_j^p) f_i = f_j^{p-1} (f_j f_i)
      Element a = power[static_cast<std::size_t>(j)];
      mul_gen(a, i);
      Element ji = gen(j);
      mul_gen(ji, i);
      Element b(n);
      b.set(j, p - 1);
      mul_nf(b, ji);
      if (a != b) fail(j, j, i, "f_j^p f_i");
      // f_j (f_i^p) = (f_j f_i) f_i^{p-1}
      Element c = gen(j);
      mul_nf(c, power[static_cast<std::size_t>(i)]);
      Element d = ji;
      for (int r = 0; r < p - 1; ++r) mul_gen(d, i);
      if (c != d) fail(j, i, i, "f_j f_i^p");
    }
  }
}

void PcGroup::Impl::check_definitions() const {
  for (int i = 0; i < n; ++i) {
    const auto& d = pres.defn[static_cast<std::size_t>(i)];
    if (!d) continue;
    Element value(n);
    if (d->kind == Definition::Kind::Power) {
      value = power[static_cast<std::size_t>(d->j)];
    } else {
      // [f_j, f_k] is stored for j > k; [f_k, f_j] = [f_j, f_k]^-1.
      if (d->j > d->k) {
        value = comm_at(d->j, d->k);
      } else {
        value = inv_slow(comm_at(d->k, d->j));
      }
    }
    if (value != gen(i))
      throw BadDefinition("definition of " + gen_name(i) + " collects to " + to_string(value));
  }
}

void PcGroup::Impl::build_inverses() {
  gen_inv.assign(static_cast<std::size_t>(n), Element(n));
  for (int g = n - 1; g >= 0; --g) {
    // f_g^-1 = f_g^{p-1} (f_g^p)^-1 and f_g^p involves only later generators.
    Element x(n);
    x.set(g, p - 1);
    mul_nf(x, inv_slow(power[static_cast<std::size_t>(g)]));
    gen_inv[static_cast<std::size_t>(g)] = x;
  }
}

void PcGroup::Impl::build_table() {
  std::uint64_t o = 1;
  bool fits = true;
  for (int i = 0; i < n; ++i) {
    if (o > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      fits = false;
      break;
    }
    o *= static_cast<std::uint64_t>(p);
  }
  if (fits) order = o;
  if (!fits || o > kTableOrderCap) return;

  place.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i + 1)] * static_cast<std::uint32_t>(p);

  const auto N = static_cast<std::size_t>(o);
  // right[x * n + g] = x * f_g
  std::vector<std::uint16_t> right(N * static_cast<std::size_t>(n));
  for (std::uint32_t x = 0; x < N; ++x) {
    Element e = at(x);
    for (int g = 0; g < n; ++g) {
      Element y = e;
      mul_gen(y, g);
      right[x * static_cast<std::size_t>(n) + static_cast<std::size_t>(g)] = static_cast<std::uint16_t>(index(y));
    }
  }
  table.assign(N * N, 0);
  for (std::uint32_t x = 0; x < N; ++x) table[static_cast<std::size_t>(x) * N] = static_cast<std::uint16_t>(x);
  for (std::uint32_t y = 1; y < N; ++y) {
    // y = y' f_g where g is the last generator with a nonzero exponent.
    int g = n - 1;
    while ((y / place[static_cast<std::size_t>(g)]) % static_cast<std::uint32_t>(p) == 0) --g;
    std::uint32_t prev = y - place[static_cast<std::size_t>(g)];
    for (std::uint32_t x = 0; x < N; ++x) {
      std::uint16_t xp = table[static_cast<std::size_t>(x) * N + prev];
      table[static_cast<std::size_t>(x) * N + y] =
          right[static_cast<std::size_t>(xp) * static_cast<std::size_t>(n) + static_cast<std::size_t>(g)];
    }
  }
  inv_table.assign(N, 0);
  for (std::uint32_t x = 0; x < N; ++x)
    for (std::uint32_t y = 0; y < N; ++y)
      if (table[static_cast<std::size_t>(x) * N + y] == 0) {
        inv_table[x] = static_cast<std::uint16_t>(y);
        break;
      }
}

PcGroup PcGroup::validate(PcPresentation presentation) {
  auto impl = std::make_shared<Impl>();
  impl->p = presentation.p;
  impl->n = presentation.n;
  impl->pres = std::move(presentation);
  impl->check_structure();
  impl->check_weights();
  impl->load_relations();
  impl->check_consistency();
  impl->build_inverses();
  impl->check_definitions();
  impl->minimal = 0;
  while (impl->minimal < impl->n && !impl->pres.defn[static_cast<std::size_t>(impl->minimal)])
    ++impl->minimal;
  impl->build_table();
  return PcGroup(std::move(impl));
}

const PcPresentation& PcGroup::presentation() const { return impl_->pres; }
const std::string& PcGroup::name() const { return impl_->pres.name; }
int PcGroup::prime() const { return impl_->p; }
int PcGroup::ngens() const { return impl_->n; }
std::optional<std::uint64_t> PcGroup::order() const { return impl_->order; }
int PcGroup::minimal_count() const { return impl_->minimal; }

Element PcGroup::identity() const { return Element(impl_->n); }
Element PcGroup::generator(int i) const { return impl_->gen(i); }
const Element& PcGroup::power_relation(int i) const { return impl_->power[static_cast<std::size_t>(i)]; }
const Element& PcGroup::commutator_relation(int i, int j) const { return impl_->comm_at(i, j); }

Element PcGroup::collect(const Word& w) const {
  Element x = identity();
  for (const auto& l : w) {
    if (l.gen < 0 || l.gen >= impl_->n) throw InputError("word mentions an unknown generator");
    x = mul(x, pow(generator(l.gen), l.exp));
  }
  return x;
}

Word PcGroup::word_of(const Element& x) const {
  Word w;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) w.push_back({i, x[i]});
  return w;
}

Element PcGroup::mul(const Element& a, const Element& b) const {
  if (indexed()) return at(mul_index(index(a), index(b)));
  Element x = a;
  impl_->mul_nf(x, b);
  return x;
}

Element PcGroup::inv(const Element& a) const {
  if (indexed()) return at(inv_index(index(a)));
  return impl_->inv_slow(a);
}

Element PcGroup::pow(const Element& a, long k) const {
  Element base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  Element result = identity();
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Element PcGroup::comm(const Element& a, const Element& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element PcGroup::conj(const Element& a, const Element& t) const { return mul(mul(inv(t), a), t); }

std::uint64_t PcGroup::element_order(const Element& a) const {
  std::uint64_t ord = 1;
  Element y = a;
  while (!y.is_identity()) {
    y = pow(y, impl_->p);
    ord *= static_cast<std::uint64_t>(impl_->p);
  }
  return ord;
}

std::vector<Element> PcGroup::elements() const {
  if (!impl_->order || *impl_->order > kEnumerationOrderCap)
    throw SizeCap("group too large to enumerate");
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*impl_->order));
  Element x = identity();
  const int n = impl_->n;
  for (std::uint64_t c = 0; c < *impl_->order; ++c) {
    out.push_back(x);
    for (int i = n - 1; i >= 0; --i) {
      if (x[i] + 1 < impl_->p) {
        x.set(i, x[i] + 1);
        break;
      }
      x.set(i, 0);
    }
  }
  return out;
}

bool PcGroup::indexed() const { return !impl_->table.empty(); }
std::uint32_t PcGroup::index(const Element& x) const { return impl_->index(x); }
Element PcGroup::at(std::uint32_t index) const { return impl_->at(index); }

std::uint32_t PcGroup::mul_index(std::uint32_t a, std::uint32_t b) const {
  return impl_->table[static_cast<std::size_t>(a) * static_cast<std::size_t>(*impl_->order) + b];
}

std::uint32_t PcGroup::inv_index(std::uint32_t a) const { return impl_->inv_table[a]; }

}  // namespace pgw
