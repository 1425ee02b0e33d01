#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "models.hpp"
#include "pgw/errors.hpp"
#include "pgw/ingest.hpp"
#include "pgw/pc.hpp"
#include "support.hpp"

using namespace pgw;
using testing::group;
using testing::word;

namespace {

PcPresentation h27_with(std::string_view extra) {
  std::string text = "name H\np 3\nn 3\ncomm 2 1 = g3^1\n";
  text += extra;
  return parse_presentation(text);
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("validate accepts the Heisenberg group and its table is associative") {
  const PcGroup G = group("h27");
  CHECK(G.order() == 27u);
  CHECK(G.minimal_count() == 2);
  const auto elems = G.elements();
  REQUIRE(elems.size() == 27);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

TEST_CASE("presentations agree with independent models") {
  CHECK(testing::matches_model(group("c9"), testing::CyclicNine{}));
  CHECK(testing::matches_model(group("h27"), testing::Heisenberg{}));
  CHECK(testing::matches_model(group("sg2187_194"), testing::MetacyclicExample{}));
}

TEST_CASE("the example presentation satisfies its defining relations") {
  const PcGroup G = group(kExampleGroupKey);
  auto f = [&](int i) { return G.generator(i - 1); };
  CHECK(G.comm(f(2), f(1)) == f(3));
  for (auto [i, j] : {std::pair{1, 7}, {2, 7}, {3, 6}, {4, 5}}) CHECK(G.comm(f(i), f(j)).is_identity());
  CHECK(G.pow(f(1), 3) == f(4));
  CHECK(G.pow(f(2), 3) == f(3));
  CHECK(G.pow(f(3), 3) == f(5));
  CHECK(G.pow(f(4), 3) == f(6));
  CHECK(G.pow(f(5), 3) == f(7));
  CHECK(G.pow(f(6), 3).is_identity());
  CHECK(G.pow(f(7), 3).is_identity());
}

TEST_CASE("validate accepts C9 with |G| = 9") {
  const PcGroup G = group("c9");
  CHECK(G.order() == 9u);
  CHECK(G.minimal_count() == 1);
}

TEST_CASE("weight violations are rejected") {
  CHECK_THROWS_AS(PcGroup::validate(h27_with("comm 3 1 = g2^1\n")), BadWeight);
  CHECK_THROWS_AS(PcGroup::validate(h27_with("pow 2 = g1^1\n")), BadWeight);
  CHECK_THROWS_AS(PcGroup::validate(h27_with("pow 3 = g3^1\n")), BadWeight);
}

TEST_CASE("inconsistent presentations are rejected") {
  // f2 = f1^3 commutes with f1, so [f2, f1] cannot be f3
  const auto P = parse_presentation("name X\np 3\nn 3\npow 1 = g2^1\ncomm 2 1 = g3^1\n");
  CHECK_THROWS_AS(PcGroup::validate(P), ConsistencyViolation);
  // fails the f_k (f_j f_i) test for (k, j, i) = (3, 2, 1)
  const auto Q = parse_presentation(
      "name Y\np 3\nn 5\ncomm 2 1 = g3^1\ncomm 3 1 = g4^1\ncomm 4 2 = g5^1\n");
  try {
    PcGroup::validate(Q);
    FAIL("expected a consistency violation");
  } catch (const ConsistencyViolation& e) {
    CHECK(e.i() == 3);
    CHECK(e.j() == 2);
    CHECK(e.k() == 1);
  }
}

TEST_CASE("bad definitions are rejected") {
  CHECK_THROWS_AS(PcGroup::validate(h27_with("def 3 = pow 1\n")), BadDefinition);
  CHECK_THROWS_AS(PcGroup::validate(h27_with("def 3 = comm 3 1\n")), BadDefinition);
  CHECK_NOTHROW(PcGroup::validate(h27_with("def 3 = comm 2 1\n")));
}

TEST_CASE("structurally invalid presentations are rejected") {
  auto P = PcPresentation::trivial("T", 3, 2);
  P.p = 9;
  CHECK_THROWS_AS(PcGroup::validate(P), InvalidPresentation);
  P = PcPresentation::trivial("T", 3, 2);
  P.power[0] = Word{{1, 3}};
  CHECK_THROWS_AS(PcGroup::validate(P), InvalidPresentation);
}

TEST_CASE("collect") {
  const PcGroup H = group("h27");
  SUBCASE("f2 f1 = f1 f2 f3 in H27") {
    CHECK(H.collect(Word{{1, 1}, {0, 1}}) == Element(3, {1, 1, 1}));
    CHECK(H.mul(H.generator(1), H.generator(0)) == Element(3, {1, 1, 1}));
  }
  SUBCASE("empty word is the identity") {
    CHECK(H.collect(Word{}) == H.identity());
    CHECK(H.collect(Word{}).is_identity());
  }
  SUBCASE("f1^4 = f1 f2 in C9") {
    const PcGroup C = group("c9");
    CHECK(C.collect(Word{{0, 4}}) == Element(2, {1, 1}));
  }
  SUBCASE("negative and large exponents are normalised") {
    CHECK(H.collect(Word{{0, -1}}) == H.inv(H.generator(0)));
    CHECK(H.collect(Word{{2, 7}}) == Element(3, {0, 0, 1}));
    CHECK(H.collect(Word{{0, 1}, {0, -1}}) == H.identity());
  }
}

TEST_CASE("collect is idempotent on normal forms") {
  for (const auto& key : testing::corpus_keys()) {
    const PcGroup G = group(key);
    if (*G.order() > 243) continue;
    for (const auto& x : G.elements()) REQUIRE(G.collect(G.word_of(x)) == x);
  }
}

TEST_CASE("group operations") {
  const PcGroup H = group("h27");
  CHECK(H.comm(H.generator(1), H.generator(0)) == H.generator(2));
  const auto a = H.generator(1), b = H.generator(0);
  CHECK(H.comm(a, b) == H.mul(H.mul(H.inv(a), H.inv(b)), H.mul(a, b)));
  CHECK(H.conj(a, b) == H.mul(H.mul(H.inv(b), a), b));
  CHECK(H.pow(a, -1) == H.inv(a));
  CHECK(H.pow(a, 0) == H.identity());
  CHECK(H.pow(a, 3) == H.identity());
  CHECK(H.pow(a, 5) == H.pow(a, 2));
  CHECK(H.pow(a, -4) == H.inv(H.pow(a, 4)));

  const PcGroup G = group(kExampleGroupKey);
  CHECK(G.comm(G.generator(1), G.generator(0)) == G.generator(2));

  std::mt19937_64 rng(7);
  for (const auto& key : testing::corpus_keys()) {
    const PcGroup K = group(key);
    for (int i = 0; i < 100; ++i) {
      const auto x = testing::random_element(K, rng);
      REQUIRE(K.mul(x, K.inv(x)).is_identity());
      REQUIRE(K.mul(K.inv(x), x).is_identity());
    }
  }
}

TEST_CASE("element orders") {
  const PcGroup C = group("c9");
  CHECK(C.element_order(C.identity()) == 1);
  CHECK(C.element_order(C.generator(0)) == 9);
  CHECK(C.element_order(C.generator(1)) == 3);

  const PcGroup G = group(kExampleGroupKey);
  CHECK(G.element_order(G.generator(5)) == 3);
  CHECK(G.element_order(G.generator(6)) == 3);
  CHECK(G.element_order(G.generator(0)) == 27);
  CHECK(G.element_order(G.generator(1)) == 81);
  for (const auto& x : G.elements()) {
    const auto k = G.element_order(x);
    REQUIRE(G.pow(x, static_cast<long>(k)).is_identity());
    REQUIRE((k == 1 || k % 3 == 0));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (const auto& key : testing::corpus_keys()) {
    const PcGroup G = group(key);
    for (int i = 0; i < 10000; ++i) {
      const auto a = testing::random_element(G, rng);
      const auto b = testing::random_element(G, rng);
      const auto c = testing::random_element(G, rng);
      REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
    }
  }
}

TEST_CASE("the pc generators generate a group of order p^n") {
  for (const auto& key : testing::corpus_keys()) {
    const PcGroup G = group(key);
    if (*G.order() > 729) continue;
    testing::Table T(G);
    std::vector<std::uint32_t> gi;
    for (int i = 0; i < G.ngens(); ++i) gi.push_back(T.idx(G.generator(i)));
    CHECK(T.closure(gi).size() == *G.order());
  }
}

TEST_CASE("indexed arithmetic matches element arithmetic") {
  const PcGroup G = group("c27c9");
  REQUIRE(G.indexed());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = testing::random_element(G, rng);
    const auto b = testing::random_element(G, rng);
    REQUIRE(G.at(G.index(a)) == a);
    REQUIRE(G.at(G.mul_index(G.index(a), G.index(b))) == G.mul(a, b));
    REQUIRE(G.at(G.inv_index(G.index(a))) == G.inv(a));
  }
  const auto elems = G.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i) REQUIRE(G.index(elems[i]) == i);
}

TEST_CASE("element formatting") {
  const PcGroup G = group(kExampleGroupKey);
  CHECK(to_string(G.identity()) == "1");
  CHECK(to_string(G.mul(G.generator(1), G.generator(5))) == "f2 f6");
  CHECK(to_string(G.pow(G.generator(4), 2)) == "f5^2");
}
