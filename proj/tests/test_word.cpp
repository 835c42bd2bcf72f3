#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fg/word.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {
const Rank r2(2);
Word W(const std::string& s) { return Word::parse(r2, s); }
}  // namespace

TEST_CASE("reduce") {
  CHECK(W("abBa") == W("aa"));
  CHECK(Word::parse(r2, "").is_identity());
  CHECK(Word::parse(r2, "1").is_identity());
  CHECK(W("abA").str() == "abA");
  CHECK_THROWS_AS(Word::parse(r2, "c"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(r2, "a c"), std::invalid_argument);

  // idempotence on already-reduced input
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Word g = oracles::random_reduced_word(r2, i % 12, rng);
    CHECK(Word::reduce(r2, g.letters()) == g);
  }
}

TEST_CASE("multiply, invert, power, conjugate") {
  CHECK(W("ab") * W("Ba") == W("aa"));
  CHECK(W("ab").pow(3) == W("ababab"));
  CHECK(W("ab").pow(3).length() == 6);
  CHECK(W("ab").pow(-2) == W("BABA"));
  CHECK(W("aabb").conjugated_by(W("A")) == W("abba"));  // a^-1 (a^2 b^2) a = a b^2 a
  CHECK_THROWS_AS(W("a") * Word::parse(Rank(3), "c"), std::invalid_argument);

  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Word g = oracles::random_reduced_word(r2, 1 + i % 10, rng);
    Word h = oracles::random_reduced_word(r2, 1 + (i * 3) % 10, rng);
    CHECK((g * g.inverse()).is_identity());
    CHECK(g.inverse().length() == g.length());
    CHECK((g * h).length() <= g.length() + h.length());
  }
}

TEST_CASE("cyclic reduction") {
  // ab^2a is conjugate to the cyclic word b^2 a^2; the canonical rotation of
  // that class is a^2 b^2.
  CyclicReduction cr = cyclic_reduce(W("abba"));
  CHECK(cr.core == CyclicWord::from_cyclically_reduced(W("bbaa")));
  CHECK(cr.core.word() == W("aabb"));
  CHECK(cr.conjugator * cr.core.word() * cr.conjugator.inverse() == W("abba"));

  CyclicReduction id = cyclic_reduce(Word::identity(r2));
  CHECK(id.core.word().is_identity());
  CHECK(id.conjugator.is_identity());

  CyclicReduction already = cyclic_reduce(W("aabb"));
  CHECK(already.core.word() == W("aabb"));
  CHECK(already.conjugator.is_identity());

  std::mt19937 rng(13);
  for (int i = 0; i < 80; ++i) {
    Word g = oracles::random_reduced_word(r2, i % 14, rng);
    CyclicReduction c = cyclic_reduce(g);
    CHECK(c.core.word().is_cyclically_reduced());
    CHECK(c.conjugator * c.core.word() * c.conjugator.inverse() == g);
  }
}

TEST_CASE("count_disjoint") {
  CHECK(count_disjoint(W("ab"), W("abab")) == 2);
  CHECK(count_disjoint(W("aa"), W("aaa")) == 1);
  CHECK(count_disjoint(W("ab"), W("BA")) == 0);
  CHECK_THROWS_AS(count_disjoint(Word::identity(r2), W("a")), std::invalid_argument);
  CHECK(count_disjoint(W("ab"), W("abab")) <= 4 / 2);

  // greedy == DP == subset enumeration on small exhaustive ranges
  auto patterns = oracles::all_reduced_words(r2, 3);
  auto words = oracles::all_reduced_words(r2, 7);
  for (const Word& w : patterns) {
    if (w.is_identity()) continue;
    for (const Word& g : words) {
      int greedy = count_disjoint(w, g);
      CHECK(greedy == oracles::max_disjoint_dp(w, g));
      CHECK(greedy <= g.length() / w.length());
    }
  }
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    Word w = oracles::random_reduced_word(r2, 1 + i % 4, rng);
    Word g = oracles::random_reduced_word(r2, i % 10, rng);
    CHECK(count_disjoint(w, g) == oracles::max_disjoint_subsets(w, g));
  }
}

TEST_CASE("conjugacy") {
  CHECK(are_conjugate(W("aabb"), W("abba")));  // a^2 b^2 ~ a b^2 a
  CHECK_FALSE(are_conjugate(W("a"), W("b")));
  CHECK(are_conjugate(W("abAB"), W("abAB")));
  CHECK_THROWS_AS(are_conjugate(W("a"), Word::parse(Rank(3), "c")), std::invalid_argument);

  std::mt19937 rng(19);
  std::vector<Word> sample;
  for (int i = 0; i < 12; ++i) sample.push_back(oracles::random_reduced_word(r2, 1 + i % 7, rng));
  for (const Word& g : sample) {
    CHECK(are_conjugate(g, g));
    Word u = oracles::random_reduced_word(r2, 4, rng);
    CHECK(are_conjugate(g, g.conjugated_by(u)));
    for (const Word& h : sample) {
      CHECK(are_conjugate(g, h) == are_conjugate(h, g));
      for (const Word& k : sample)
        if (are_conjugate(g, h) && are_conjugate(h, k)) CHECK(are_conjugate(g, k));
    }
  }
}

TEST_CASE("primitive root") {
  auto p = primitive_root(W("ab").pow(3));
  CHECK(p.root == W("ab"));
  CHECK(p.exponent == 3);
  CHECK(primitive_root(W("aab")).exponent == 1);
  CHECK(primitive_root(W("aab")).root == W("aab"));
  CHECK(primitive_root(W("a")).exponent == 1);
  CHECK_THROWS_AS(primitive_root(Word::identity(r2)), std::invalid_argument);

  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    Word g = oracles::random_cyclically_reduced_word(r2, 1 + i % 6, rng);
    auto root = primitive_root(g).root;
    for (int k = 1; k <= 4; ++k) {
      auto pk = primitive_root(g.pow(k));
      CHECK(pk.root == root);
      CHECK(pk.root.pow(pk.exponent) == g.pow(k));
    }
  }
}

TEST_CASE("letter order and canonical rotation") {
  CHECK(W("a") < W("A"));
  CHECK(W("A") < W("b"));
  CHECK(W("b") < W("B"));
  CHECK(W("a") < W("aa"));  // shortlex
  CHECK(CyclicWord::from_cyclically_reduced(W("ba")).word() == W("ab"));
  CHECK_THROWS_AS(CyclicWord::from_cyclically_reduced(W("abA")), std::invalid_argument);
}
