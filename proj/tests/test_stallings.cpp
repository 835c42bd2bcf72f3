#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fg/stallings.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {
const Rank r2(2);
Word W(const std::string& s) { return Word::parse(r2, s); }

StallingsGraph example_a2() {
  std::vector<Word> gens = {W("abAB"), W("bbbb"), W("aaa")};
  return StallingsGraph::build(r2, gens);
}
}  // namespace

TEST_CASE("build") {
  StallingsGraph a2 = example_a2();
  CHECK(a2.vertex_count() == 7);
  CHECK(a2.edge_count() == 9);
  CHECK(a2.subgroup_rank() == 3);

  std::vector<Word> rose_gens = {W("a"), W("b")};
  StallingsGraph rose = StallingsGraph::build(r2, rose_gens);
  CHECK(rose.vertex_count() == 1);
  CHECK(rose.edge_count() == 2);

  std::vector<Word> idx2 = {W("aa"), W("b"), W("abA")};
  StallingsGraph two = StallingsGraph::build(r2, idx2);
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 4);

  std::vector<Word> empty;
  StallingsGraph trivial = StallingsGraph::build(r2, empty);
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edge_count() == 0);
}

TEST_CASE("membership and witnesses") {
  StallingsGraph a2 = example_a2();
  auto w1 = a2.membership(W("abAB"));
  REQUIRE(w1.has_value());
  CHECK(evaluate_witness(r2, a2.defining_generators(), *w1) == W("abAB"));
  CHECK(w1->factors.size() == 1);

  CHECK_FALSE(a2.membership(W("b")).has_value());
  CHECK_FALSE(a2.membership(W("bb")).has_value());
  CHECK(a2.membership(W("bbbb")).has_value());

  auto id = a2.membership(Word::identity(r2));
  REQUIRE(id.has_value());
  CHECK(id->factors.empty());

  // round trip on random generating sets
  std::mt19937 rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Word> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i)
      gens.push_back(oracles::random_reduced_word(r2, 1 + static_cast<int>(rng() % 6), rng));
    StallingsGraph g = StallingsGraph::build(r2, gens);
    for (int probe = 0; probe < 8; ++probe) {
      Word product = Word::identity(r2);
      int factors = 1 + static_cast<int>(rng() % 4);
      for (int f = 0; f < factors; ++f) {
        const Word& gen = gens[rng() % gens.size()];
        product = product * (rng() % 2 ? gen : gen.inverse());
      }
      auto witness = g.membership(product);
      REQUIRE(witness.has_value());
      CHECK(evaluate_witness(r2, gens, *witness) == product);
    }
  }
}

TEST_CASE("index and bad vertices") {
  StallingsGraph a2 = example_a2();
  CHECK_FALSE(a2.index().has_value());
  auto bad = a2.bad_vertices();
  CHECK(bad.size() == 6);
  for (const auto& vc : bad) {
    CHECK(vc.vertex != a2.base());
    CHECK(vc.valence < 4);
    CHECK(vc.bad);
    CHECK(!vc.missing_slots.empty());
  }

  std::vector<Word> idx2 = {W("aa"), W("b"), W("abA")};
  StallingsGraph two = StallingsGraph::build(r2, idx2);
  REQUIRE(two.index().has_value());
  CHECK(*two.index() == 2);
  CHECK(two.bad_vertices().empty());

  std::vector<Word> rose_gens = {W("a"), W("b")};
  CHECK(*StallingsGraph::build(r2, rose_gens).index() == 1);

  std::vector<Word> empty;
  StallingsGraph trivial = StallingsGraph::build(r2, empty);
  auto tb = trivial.bad_vertices();
  REQUIRE(tb.size() == 1);
  CHECK(tb[0].vertex == 0);
  CHECK(tb[0].valence == 0);
  CHECK(tb[0].missing_slots.size() == 4);
}

TEST_CASE("coset data") {
  std::vector<Word> idx2 = {W("aa"), W("b"), W("abA")};
  CosetData cd = StallingsGraph::build(r2, idx2).coset_data();
  CHECK(cd.cosets == 2);
  CHECK(cd.generator_permutations[0] == std::vector<int>{1, 0});
  CHECK(cd.generator_permutations[1] == std::vector<int>{0, 1});
  CHECK(cd.exponents[0] == 2);
  CHECK(cd.exponents[1] == 1);

  std::vector<Word> rose_gens = {W("a"), W("b")};
  CosetData full = StallingsGraph::build(r2, rose_gens).coset_data();
  CHECK(full.cosets == 1);
  CHECK(full.exponents == std::vector<long>{1, 1});

  std::vector<Word> idx3 = {W("aaa"), W("b"), W("abA"), W("aabAA")};
  CosetData three = StallingsGraph::build(r2, idx3).coset_data();
  CHECK(three.cosets == 3);
  CHECK(three.exponents[0] == 3);
  CHECK(three.exponents[1] == 1);

  CHECK_THROWS_AS(example_a2().coset_data(), std::domain_error);

  // Lagrange-style check: g^(index!) is always a member
  std::mt19937 rng(71);
  for (int i = 0; i < 10; ++i) {
    Word g = oracles::random_reduced_word(r2, 1 + i % 4, rng);
    CHECK(StallingsGraph::build(r2, idx3).membership(g.pow(6)).has_value());
  }
}

TEST_CASE("enumerate elements") {
  StallingsGraph a2 = example_a2();
  auto ball3 = a2.enumerate_elements(3);
  REQUIRE(ball3.size() == 3);
  CHECK(ball3[0].is_identity());
  CHECK(ball3[1] == W("aaa"));
  CHECK(ball3[2] == W("AAA"));

  CHECK(a2.enumerate_elements(0) == std::vector<Word>{Word::identity(r2)});

  std::vector<Word> rose_gens = {W("a"), W("b")};
  auto rose1 = StallingsGraph::build(r2, rose_gens).enumerate_elements(1);
  REQUIRE(rose1.size() == 5);
  CHECK(rose1[0].is_identity());
  CHECK(rose1[1] == W("a"));
  CHECK(rose1[2] == W("A"));
  CHECK(rose1[3] == W("b"));
  CHECK(rose1[4] == W("B"));

  // oracle equivalence against the naive ball (stabilized factor count)
  std::vector<Word> idx2 = {W("aa"), W("b"), W("abA")};
  auto fast = StallingsGraph::build(r2, idx2).enumerate_elements(5);
  auto naive = oracles::naive_subgroup_ball(r2, idx2, 6, 5);
  CHECK(fast == naive);

  std::vector<Word> a2gens = {W("abAB"), W("bbbb"), W("aaa")};
  auto fast2 = a2.enumerate_elements(6);
  auto naive2 = oracles::naive_subgroup_ball(r2, a2gens, 5, 6);
  CHECK(fast2 == naive2);
}

TEST_CASE("folding confluence") {
  std::vector<Word> gens = {W("abAB"), W("bbbb"), W("aaa")};
  std::vector<Word> permuted = {W("aaa"), W("abAB"), W("bbbb")};
  std::vector<Word> inverted = {W("baBA"), W("BBBB"), W("aaa")};
  StallingsGraph g1 = StallingsGraph::build(r2, gens);
  CHECK(g1 == StallingsGraph::build(r2, permuted));
  CHECK(g1 == StallingsGraph::build(r2, inverted));

  std::mt19937 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Word> random_gens;
    for (int i = 0; i < 3; ++i)
      random_gens.push_back(oracles::random_reduced_word(r2, 1 + static_cast<int>(rng() % 5), rng));
    std::vector<Word> shuffled = random_gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (Word& w : shuffled)
      if (rng() % 2) w = w.inverse();
    CHECK(StallingsGraph::build(r2, random_gens) == StallingsGraph::build(r2, shuffled));
  }
}

TEST_CASE("dot export") {
  std::string dot = example_a2().to_dot();
  CHECK(dot.find("digraph stallings") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}
