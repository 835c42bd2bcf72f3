#pragma once

// Constructive killer words: reduced words that are not subwords of any
// element of a given finitely generated subgroup of infinite index. The
// construction extends non-backtracking paths to bad vertices and steps
// through slots missing from the core graph; every output is verified
// against the defining property before it is returned.

#include <string>
#include <vector>

#include "fg/stallings.hpp"
#include "fg/word.hpp"

namespace fg {

/// A reduced path: start vertex plus the signed letters read along it.
struct GraphPath {
  int start = 0;
  std::vector<Letter> letters;
  int end = 0;
};

struct KillerWord {
  Word word;
  bool verified = false;
};

struct KillerTraceStep {
  int stage;        // 1-based vertex stage in the induction
  int vertex;       // vertex handled at this stage
  bool exited;      // word already exits from this vertex
  Word extension;   // letters appended inside the graph
  Word word_after;  // w_k
};

/// Shortest reduced continuation of `prefix` that terminates at `target`,
/// found by search over (vertex, arrival letter) states. Requires every
/// vertex valence >= 2 (the hypothesis under which reachability holds).
GraphPath extend_reduced_path(const StallingsGraph& graph, const GraphPath& prefix, int target);

/// The inductive construction over the vertices in breadth-first order:
/// nearest reachable bad vertex, lowest missing slot. Requires infinite
/// index and minimum valence 2.
KillerWord killer_word(const StallingsGraph& graph, std::vector<KillerTraceStep>* trace = nullptr);

/// True iff reading w from every vertex exits the graph; this is the
/// defining property (subwords of subgroup elements are paths in the core).
bool verify_killer(const StallingsGraph& graph, const Word& w);

/// Right-multiply by the first non-cancelling generator letter until
/// cyclically reduced; superwords of killer words are killer, and the result
/// is re-verified. Requires rank >= 2.
KillerWord cyclically_reduced_killer(const StallingsGraph& graph, const KillerWord& w);

}  // namespace fg
