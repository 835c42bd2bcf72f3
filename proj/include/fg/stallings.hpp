#pragma once

// Folded subgroup graphs (Stallings graphs): construction by folding, core
// trimming, membership with witnesses over the defining generators, index and
// coset permutation data, and exact enumeration of short subgroup elements.
//
// Graphs are built in a canonical form (breadth-first relabelling from the
// base vertex in the fixed letter order), so structural equality decides
// based labelled isomorphism.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fg/word.hpp"

namespace fg {

struct VertexClass {
  int vertex;
  int valence;  // incident half-edges; loops count twice
  bool bad;     // valence < 2n
  std::vector<Letter> missing_slots;  // directions not readable from this vertex
};

struct CosetData {
  int cosets;
  std::vector<std::vector<int>> generator_permutations;  // [generator-1][coset]
  std::vector<long> exponents;  // minimal k >= 1 with x^k acting trivially
};

/// Membership witness: g as a product of the defining generators, as a list
/// of (generator index, +1/-1) factors.
struct MembershipWitness {
  std::vector<std::pair<int, int>> factors;
};

class StallingsGraph {
 public:
  /// Fold the wedge of the generator loops and trim valence-1 vertices (the
  /// base vertex is always retained).
  static StallingsGraph build(Rank rank, std::span<const Word> generators);

  Rank rank() const { return rank_; }
  int base() const { return 0; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  int edge_count() const;
  const std::vector<Word>& defining_generators() const { return generators_; }

  /// Read one letter from v; nullopt when the slot is missing.
  std::optional<int> step(int v, Letter l) const;

  struct ReadResult {
    bool stayed;      // the whole word is readable inside the graph
    int end;          // final vertex when stayed
    int consumed;     // letters consumed before exiting
  };
  ReadResult read(int v, const Word& w) const;

  int valence(int v) const;
  bool is_bad(int v) const { return valence(v) < 2 * rank_.value(); }
  int min_valence() const;
  std::vector<VertexClass> bad_vertices() const;

  /// Finite index (= vertex count) iff the graph is a full covering;
  /// nullopt means infinite index.
  std::optional<int> index() const;
  CosetData coset_data() const;

  /// All reduced words of length <= max_len readable as base loops, sorted.
  std::vector<Word> enumerate_elements(int max_len) const;

  /// Present iff g is in the subgroup; the witness multiplies out to g.
  std::optional<MembershipWitness> membership(const Word& g) const;

  /// Rank of the subgroup (edges - vertices + 1 of the connected core).
  int subgroup_rank() const { return edge_count() - vertex_count() + 1; }

  std::string to_dot() const;

  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
    return a.rank_ == b.rank_ && a.out_ == b.out_ && a.in_ == b.in_;
  }

 private:
  StallingsGraph(Rank rank) : rank_(rank) {}

  void build_witness_tables();

  Rank rank_;
  std::vector<Word> generators_;
  // out_[v][lab-1] / in_[v][lab-1]: target vertex or -1.
  std::vector<std::vector<int>> out_, in_;

  // Spanning tree and subgroup basis for membership witnesses.
  struct ParentLink {
    int parent = -1;
    int lab = 0;
    int dir = 0;  // +1: edge parent->v, -1: edge v->parent
  };
  std::vector<ParentLink> parent_;
  std::vector<Word> tree_path_;                 // base -> v
  std::vector<std::vector<int>> basis_of_out_;  // [v][lab-1] -> basis index or -1
  std::vector<Word> basis_words_;
  std::vector<std::vector<std::pair<int, int>>> basis_over_generators_;
  std::string witness_status_;  // nonempty when witness machinery unavailable
};

/// Evaluate a witness against a generator list.
Word evaluate_witness(Rank rank, std::span<const Word> generators, const MembershipWitness& w);

}  // namespace fg
