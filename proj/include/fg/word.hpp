#pragma once

// Reduced words in finite-rank free groups: the universal value type of the
// library. Words are immutable and always stored reduced; the constructors
// are the only place reduction happens, so no unreduced Word can exist.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fg {

/// Number of standard generators of a free group F_n, n >= 1.
class Rank {
 public:
  explicit Rank(int n);
  int value() const { return n_; }
  friend bool operator==(Rank a, Rank b) { return a.n_ == b.n_; }
  friend bool operator!=(Rank a, Rank b) { return a.n_ != b.n_; }

 private:
  int n_;
};

/// One alphabet symbol x_i or x_i^{-1}, encoded as a signed nonzero index
/// (+i for x_i, -i for x_i^{-1}, i 1-based).
class Letter {
 public:
  Letter(int generator, int sign);
  static Letter from_code(int32_t code);

  int32_t code() const { return code_; }
  int generator() const { return code_ > 0 ? code_ : -code_; }
  int sign() const { return code_ > 0 ? 1 : -1; }
  Letter inverse() const { return from_code(-code_); }

  /// Fixed letter order x_1 < x_1^{-1} < x_2 < x_2^{-1} < ...; used for
  /// canonical rotations, deterministic searches and shortlex.
  int order_key() const { return 2 * (generator() - 1) + (code_ < 0 ? 1 : 0); }

  /// Text syntax: 'a'..'z' are generators 1..26, 'A'..'Z' their inverses.
  static Letter from_char(char c);
  char to_char() const;

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

 private:
  explicit Letter(int32_t code) : code_(code) {}
  int32_t code_;
};

class Word {
 public:
  /// The identity element of F_n.
  static Word identity(Rank rank);
  /// Reduce an arbitrary letter sequence. Idempotent on reduced input.
  static Word reduce(Rank rank, std::span<const Letter> letters);
  /// Parse the text syntax ("AbaaB" = a^-1 b a^2 b^-1, "1" or "" = identity).
  static Word parse(Rank rank, std::string_view text);

  Rank rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(int i) const { return letters_[static_cast<size_t>(i)]; }

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(int k) const;
  /// u * (*this) * u^{-1}.
  Word conjugated_by(const Word& u) const;

  bool is_cyclically_reduced() const;

  /// Exponent sum of generator i (1-based) in this word.
  long exponent_sum(int generator) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  /// Shortlex under the fixed letter order; total, used for deterministic
  /// enumeration and sorted output.
  friend bool operator<(const Word& a, const Word& b);

 private:
  Word(Rank rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}
  Rank rank_;
  std::vector<Letter> letters_;
};

/// Conjugacy-class representative: a cyclically reduced word stored in its
/// lexicographically least rotation under the fixed letter order.
class CyclicWord {
 public:
  /// Canonicalize a cyclically reduced word (throws otherwise).
  static CyclicWord from_cyclically_reduced(const Word& w);

  const Word& word() const { return word_; }
  Rank rank() const { return word_.rank(); }
  int length() const { return word_.length(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.word_ == b.word_; }
  friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return !(a == b); }

 private:
  explicit CyclicWord(Word w) : word_(std::move(w)) {}
  Word word_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // g = conjugator * core * conjugator^{-1}
};

/// Strip conjugating ends and canonically rotate: g = u c u^{-1} with c the
/// canonical representative of g's conjugacy class.
CyclicReduction cyclic_reduce(const Word& g);

/// Little counting function c_w: maximum number of pairwise disjoint
/// occurrences of the reduced pattern w in the reduced form of g.
/// Greedy leftmost selection; optimal since occurrences all have length l(w).
int count_disjoint(const Word& pattern, const Word& g);

bool are_conjugate(const Word& g, const Word& h);

struct PrimitiveRoot {
  Word root;
  int exponent;  // g = root^exponent, root not a proper power
};
PrimitiveRoot primitive_root(const Word& g);

}  // namespace fg
