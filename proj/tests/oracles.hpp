#pragma once

// Test-only oracles, kept independent of the implementation paths they check:
// dynamic-programming and subset-enumeration maxima for disjoint occurrences,
// the defect-controlled bracket for homogenisation limits, breadth-first
// factorization search for the bi-invariant norm, and naive subgroup balls.

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fg/quasimorphism.hpp"
#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace oracles {

using fg::Letter;
using fg::Rank;
using fg::Rational;
using fg::Word;

inline std::vector<int> occurrence_positions(const Word& w, const Word& g) {
  std::vector<int> pos;
  int m = w.length(), L = g.length();
  for (int i = 0; i + m <= L; ++i) {
    bool ok = true;
    for (int t = 0; t < m && ok; ++t) ok = g.letter(i + t) == w.letter(t);
    if (ok) pos.push_back(i);
  }
  return pos;
}

inline bool is_subword(const Word& w, const Word& g) {
  return !occurrence_positions(w, g).empty();
}

/// Maximum set of pairwise disjoint occurrences via dynamic programming over
/// start positions (no greedy choice involved).
inline int max_disjoint_dp(const Word& w, const Word& g) {
  int m = w.length(), L = g.length();
  std::vector<bool> occ(static_cast<size_t>(L) + 1, false);
  for (int p : occurrence_positions(w, g)) occ[static_cast<size_t>(p)] = true;
  std::vector<int> best(static_cast<size_t>(L) + static_cast<size_t>(m) + 2, 0);
  for (int i = L - 1; i >= 0; --i) {
    best[static_cast<size_t>(i)] = best[static_cast<size_t>(i) + 1];
    if (occ[static_cast<size_t>(i)])
      best[static_cast<size_t>(i)] =
          std::max(best[static_cast<size_t>(i)], 1 + best[static_cast<size_t>(i + m)]);
  }
  return best[0];
}

/// Brute force over all subsets of occurrence positions (tiny instances).
inline int max_disjoint_subsets(const Word& w, const Word& g) {
  std::vector<int> pos = occurrence_positions(w, g);
  int n = static_cast<int>(pos.size()), m = w.length();
  if (n > 20) throw std::invalid_argument("max_disjoint_subsets: too many occurrences");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int cnt = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++cnt;
      for (int j = i + 1; j < n && ok; ++j)
        if (mask >> j & 1) ok = pos[j] >= pos[i] + m;
    }
    if (ok) best = std::max(best, cnt);
  }
  return best;
}

/// Defect-controlled bracket: the homogenisation lies within 2/N of
/// psi(g^N)/N because the counting quasi-morphism has defect at most 2.
inline std::pair<Rational, Rational> homog_bracket(const fg::CountingQm& qm, const Word& g, int N) {
  Rational mid = Rational(qm.psi(g.pow(N))) / N;
  Rational eps = Rational(2) / N;
  return {mid - eps, mid + eps};
}

/// All reduced words of length <= max_len, shortlex order.
inline std::vector<Word> all_reduced_words(Rank rank, int max_len) {
  std::vector<Word> out;
  out.push_back(Word::identity(rank));
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) return;
    for (int lab = 1; lab <= rank.value(); ++lab) {
      for (int s : {1, -1}) {
        Letter l(lab, s);
        if (!cur.empty() && cur.back() == l.inverse()) continue;
        cur.push_back(l);
        out.push_back(Word::reduce(rank, cur));
        self(self, remaining - 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, max_len);
  std::sort(out.begin(), out.end());
  return out;
}

inline Word random_reduced_word(Rank rank, int len, std::mt19937& rng) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> lab(1, rank.value());
  std::uniform_int_distribution<int> sgn(0, 1);
  while (static_cast<int>(letters.size()) < len) {
    Letter l(lab(rng), sgn(rng) ? 1 : -1);
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word::reduce(rank, letters);
}

inline Word random_cyclically_reduced_word(Rank rank, int len, std::mt19937& rng) {
  for (;;) {
    Word w = random_reduced_word(rank, len, rng);
    if (w.is_cyclically_reduced() && !w.is_identity()) return w;
  }
}

/// Breadth-first factorization oracle for the conjugation-invariant norm
/// restricted to conjugators of length <= conj_budget. Small arities are
/// searched directly; deeper queries use two proved facts (each factor moves
/// the abelianisation by exactly one unit in one coordinate, so products of r
/// factors have L1 <= r and L1 == r mod 2) plus recursion.
class NormFactorizationOracle {
 public:
  NormFactorizationOracle(Rank rank, int conj_budget) : rank_(rank) {
    std::set<std::string> seen;
    for (const Word& u : all_reduced_words(rank, conj_budget)) {
      for (int lab = 1; lab <= rank.value(); ++lab) {
        for (int s : {1, -1}) {
          Word one = Word::reduce(rank, std::vector<Letter>{Letter(lab, s)});
          Word c = one.conjugated_by(u);
          if (seen.insert(c.str()).second) factors_.push_back(c);
        }
      }
    }
    for (const Word& c : factors_) factor_set_.insert(c.str());
  }

  bool expressible(const Word& g, int r) const {
    long l1 = 0;
    for (int i = 1; i <= rank_.value(); ++i) {
      long e = g.exponent_sum(i);
      l1 += e < 0 ? -e : e;
    }
    if (l1 > r || ((r - l1) % 2) != 0) return false;
    if (r == 0) return g.is_identity();
    if (r == 1) return factor_set_.count(g.str()) > 0;
    if (r == 2) {
      for (const Word& c : factors_)
        if (factor_set_.count((c.inverse() * g).str())) return true;
      return false;
    }
    for (const Word& c : factors_)
      if (expressible(c.inverse() * g, r - 1)) return true;
    return false;
  }

  /// Least r <= r_max expressing g, or nullopt.
  std::optional<int> min_factors(const Word& g, int r_max) const {
    for (int r = 0; r <= r_max; ++r)
      if (expressible(g, r)) return r;
    return std::nullopt;
  }

 private:
  Rank rank_;
  std::vector<Word> factors_;
  std::unordered_set<std::string> factor_set_;
};

/// Subgroup elements of length <= max_len found among products of at most
/// max_factors defining generators (sound; complete once stabilized).
inline std::vector<Word> naive_subgroup_ball(Rank rank, const std::vector<Word>& generators,
                                             int max_factors, int max_len) {
  std::set<std::string> visited;
  std::vector<Word> frontier{Word::identity(rank)};
  visited.insert(frontier[0].str());
  std::vector<Word> all{frontier};
  for (int depth = 0; depth < max_factors; ++depth) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& g : generators) {
        for (int s : {1, -1}) {
          Word v = w * (s > 0 ? g : g.inverse());
          if (visited.insert(v.str()).second) {
            next.push_back(v);
            all.push_back(v);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> ball;
  for (const Word& w : all)
    if (w.length() <= max_len) ball.push_back(w);
  std::sort(ball.begin(), ball.end());
  return ball;
}

}  // namespace oracles
