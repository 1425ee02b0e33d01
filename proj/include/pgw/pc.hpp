#pragma once

// Power-commutator presentations of finite p-groups and exact element
// arithmetic by collection.
//
// Generators are 0-based in the API (f_1 is index 0); the text file format
// and all human-readable output are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgw {

inline constexpr int kMaxGenerators = 16;
inline constexpr int kMaxPrime = 97;
// Groups up to this order get a full multiplication table.
inline constexpr std::uint64_t kTableOrderCap = 4096;
// Operations that enumerate every element refuse larger groups.
inline constexpr std::uint64_t kEnumerationOrderCap = 1u << 20;

/// Normal-form exponent vector f_1^e_1 ... f_n^e_n, each e_i in [0, p).
class Element {
 public:
  Element() = default;
  explicit Element(int n) : n_(static_cast<std::uint8_t>(n)) {}
  Element(int n, std::initializer_list<int> exps);

  int size() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int v) { e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v); }
  bool is_identity() const;

  std::span<const std::uint8_t> exponents() const { return {e_.data(), n_}; }

  // Lexicographic on the exponent vector.
  auto operator<=>(const Element&) const = default;

 private:
  std::array<std::uint8_t, kMaxGenerators> e_{};
  std::uint8_t n_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

struct Letter {
  int gen = 0;  // 0-based
  long exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

struct Definition {
  enum class Kind { Power, Commutator };
  Kind kind = Kind::Power;
  int j = 0;  // pow: f_i := f_j^p;  comm: f_i := [f_j, f_k]
  int k = 0;
  bool operator==(const Definition&) const = default;
};

/// Raw presentation data as read from a file. Relation words must be in
/// normal form (strictly increasing generators, exponents in [1, p)).
struct PcPresentation {
  std::string name;
  int p = 0;
  int n = 0;
  std::vector<Word> power;                     // size n; empty word = identity
  std::map<std::pair<int, int>, Word> comm;    // key (i, j) with i > j
  std::vector<std::optional<Definition>> defn; // size n

  /// Presentation with n generators and all relations trivial.
  static PcPresentation trivial(std::string name, int p, int n);

  bool operator==(const PcPresentation&) const = default;
};

bool is_prime(int p);

/// A validated, immutable presentation with its collector. Copies share
/// state and are safe to use from several threads.
class PcGroup {
 public:
  /// Runs the structural, weight, definition and local consistency checks.
  static PcGroup validate(PcPresentation presentation);

  const PcPresentation& presentation() const;
  const std::string& name() const;
  int prime() const;
  int ngens() const;
  /// p^n, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;
  /// Number of leading generators without a definition.
  int minimal_count() const;

  Element identity() const;
  Element generator(int i) const;
  const Element& power_relation(int i) const;
  const Element& commutator_relation(int i, int j) const;  // i > j

  Element collect(const Word& w) const;
  Word word_of(const Element& x) const;

  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, long k) const;
  /// [a, b] = a^-1 b^-1 a b
  Element comm(const Element& a, const Element& b) const;
  /// a^t = t^-1 a t
  Element conj(const Element& a, const Element& t) const;
  std::uint64_t element_order(const Element& a) const;

  /// Every element, in lexicographic order. Throws SizeCap above
  /// kEnumerationOrderCap.
  std::vector<Element> elements() const;

  /// Dense indexing is available when the multiplication table was built.
  bool indexed() const;
  std::uint32_t index(const Element& x) const;
  Element at(std::uint32_t index) const;
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_index(std::uint32_t a) const;

 private:
  struct Impl;
  explicit PcGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Human-readable 1-based word, e.g. "f2 f6" or "f5^2 f6 f7"; "1" for identity.
std::string to_string(const Element& x);

}  // namespace pgw
