#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fg/killer.hpp"
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

TEST_CASE("extend_reduced_path") {
  StallingsGraph a2 = example_a2();
  // the vertex reached by a^-1 from the base
  int via_a_inverse = *a2.step(a2.base(), Letter(1, -1));
  GraphPath empty{a2.base(), {}, a2.base()};
  GraphPath p = extend_reduced_path(a2, empty, via_a_inverse);
  CHECK(p.end == via_a_inverse);
  CHECK(p.letters.size() == 1);
  CHECK(p.letters[0] == Letter(1, -1));

  // a nonempty prefix already at the target is returned unchanged
  GraphPath at_target{a2.base(), {Letter(1, -1)}, via_a_inverse};
  GraphPath same = extend_reduced_path(a2, at_target, via_a_inverse);
  CHECK(same.letters == at_target.letters);

  // cycle graph from a single relator: paths run along the cycle
  std::vector<Word> cyc = {W("bbbb")};
  StallingsGraph cycle = StallingsGraph::build(r2, cyc);
  REQUIRE(cycle.vertex_count() == 4);
  int opposite = *cycle.step(*cycle.step(0, Letter(2, 1)), Letter(2, 1));
  GraphPath start{0, {}, 0};
  GraphPath along = extend_reduced_path(cycle, start, opposite);
  CHECK(along.letters.size() == 2);
  CHECK(along.end == opposite);

  // valence-1 vertices break the lemma's hypothesis
  std::vector<Word> whisker = {W("abA")};
  StallingsGraph bad = StallingsGraph::build(r2, whisker);
  CHECK_THROWS_AS(extend_reduced_path(bad, GraphPath{0, {}, 0}, 0), std::domain_error);
}

TEST_CASE("killer_word construction") {
  StallingsGraph a2 = example_a2();
  std::vector<KillerTraceStep> trace;
  KillerWord kw = killer_word(a2, &trace);
  CHECK(kw.verified);
  CHECK(verify_killer(a2, kw.word));
  CHECK(kw.word == W("aBab"));  // deterministic strategy: nearest bad vertex, lowest missing slot

  // stagewise invariants: w_{k-1} is a prefix of w_k, and at stage k the word
  // exits from all vertices handled so far
  Word prev = Word::identity(r2);
  for (const auto& step : trace) {
    const Word& cur = step.word_after;
    REQUIRE(prev.length() <= cur.length());
    for (int i = 0; i < prev.length(); ++i) CHECK(prev.letter(i) == cur.letter(i));
    for (int v = 0; v < step.stage; ++v) CHECK_FALSE(a2.read(v, cur).stayed);
    prev = cur;
  }

  // soundness against the brute-force ball
  for (const Word& g : a2.enumerate_elements(12)) {
    CHECK_FALSE(oracles::is_subword(kw.word, g));
    CHECK_FALSE(oracles::is_subword(kw.word.inverse(), g));
  }

  // finite index: no killer word exists
  std::vector<Word> idx2 = {W("aa"), W("b"), W("abA")};
  CHECK_THROWS_AS(killer_word(StallingsGraph::build(r2, idx2)), std::domain_error);

  // valence-1 vertices are rejected rather than special-cased
  std::vector<Word> whisker = {W("abA")};
  CHECK_THROWS_AS(killer_word(StallingsGraph::build(r2, whisker)), std::domain_error);

  // <a> <= F_2: the killer word must use the other generator
  std::vector<Word> just_a = {W("a")};
  KillerWord kb = killer_word(StallingsGraph::build(r2, just_a));
  CHECK(kb.verified);
  bool uses_b = false;
  for (Letter l : kb.word.letters()) uses_b |= l.generator() == 2;
  CHECK(uses_b);
}

TEST_CASE("verify_killer on the worked example") {
  StallingsGraph a2 = example_a2();
  CHECK(verify_killer(a2, W("Abaab")));
  CHECK(verify_killer(a2, W("Abaa")));
  CHECK_FALSE(verify_killer(a2, W("Aba")));  // readable from one vertex
  CHECK_FALSE(verify_killer(a2, W("b")));
  CHECK_FALSE(verify_killer(a2, Word::identity(r2)));
}

TEST_CASE("paper example A.2 trace") {
  // Follow the worked construction's choices explicitly: path v0 -> v1 reads
  // a^-1; augmenting by b gives a^-1 b, unreadable from v0; a^-1 b a is
  // readable from v2 (through v0 and v4), so the next word is a^-1 b a^2,
  // unreadable from every remaining vertex.
  StallingsGraph a2 = example_a2();
  int v1 = *a2.step(0, Letter(1, -1));
  REQUIRE(a2.is_bad(v1));

  CHECK_FALSE(a2.read(0, W("Ab")).stayed);

  auto from_v1 = a2.read(v1, W("Ab"));
  REQUIRE(from_v1.stayed);
  int v3 = from_v1.end;
  REQUIRE(a2.is_bad(v3));
  CHECK_FALSE(a2.read(v1, W("Aba")).stayed);

  int v2 = *a2.step(v1, Letter(1, -1));
  auto from_v2 = a2.read(v2, W("Aba"));
  CHECK(from_v2.stayed);  // path v2 v0 v4 v3
  CHECK(from_v2.end == v3);
  CHECK_FALSE(a2.read(v2, W("Abaa")).stayed);

  for (int v = 0; v < a2.vertex_count(); ++v) CHECK_FALSE(a2.read(v, W("Abaa")).stayed);
}

TEST_CASE("cyclically_reduced_killer") {
  StallingsGraph a2 = example_a2();
  // the worked example: a^-1 b a^2 becomes a^-1 b a^2 b
  KillerWord staged{W("Abaa"), verify_killer(a2, W("Abaa"))};
  REQUIRE(staged.verified);
  KillerWord fixed = cyclically_reduced_killer(a2, staged);
  CHECK(fixed.word == W("Abaab"));
  CHECK(fixed.word.is_cyclically_reduced());
  CHECK(fixed.verified);

  KillerWord already = killer_word(a2);
  REQUIRE(already.word.is_cyclically_reduced());
  CHECK(cyclically_reduced_killer(a2, already).word == already.word);

  KillerWord unverified{W("Abaa"), false};
  CHECK_THROWS_AS(cyclically_reduced_killer(a2, unverified), std::domain_error);

  // rank-1 graphs are rejected
  Rank r1(1);
  std::vector<Word> r1gens;
  StallingsGraph line = StallingsGraph::build(r1, r1gens);
  KillerWord dummy{Word::parse(r1, "a"), true};
  CHECK_THROWS_AS(cyclically_reduced_killer(line, dummy), std::domain_error);
}

TEST_CASE("killer words are closed under superwords") {
  StallingsGraph a2 = example_a2();
  KillerWord kw = killer_word(a2);
  std::mt19937 rng(79);
  for (int i = 0; i < 30; ++i) {
    // extend on the right without cancellation
    std::vector<Letter> letters = kw.word.letters();
    for (int t = 0; t < 1 + i % 4; ++t) {
      for (;;) {
        Letter l(1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
        if (l.inverse() == letters.back()) continue;
        letters.push_back(l);
        break;
      }
    }
    Word super = Word::reduce(r2, letters);
    REQUIRE(super.length() == static_cast<int>(letters.size()));
    CHECK(verify_killer(a2, super));
  }
}
