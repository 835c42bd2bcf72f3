#pragma once

// Homomorphisms F_m -> F_n between free groups with bi-invariant word
// metrics: exact classification (isomorphism / non-injective / proper finite
// index / infinite index) plus checkable witnesses showing why each non-
// isomorphism fails to be a quasi-isometry.

#include <optional>
#include <string>
#include <vector>

#include "fg/killer.hpp"
#include "fg/norm.hpp"
#include "fg/quasimorphism.hpp"
#include "fg/stallings.hpp"
#include "fg/word.hpp"

namespace fg {

class Homomorphism {
 public:
  /// images[i] is the image of source generator i+1; all in F_target.
  Homomorphism(Rank source, Rank target, std::vector<Word> images);

  Rank source_rank() const { return source_; }
  Rank target_rank() const { return target_; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& g) const;
  StallingsGraph image_graph() const { return StallingsGraph::build(target_, images_); }

 private:
  Rank source_, target_;
  std::vector<Word> images_;
};

enum class VerdictKind { isomorphism, non_injective, finite_index_proper, infinite_index };

std::string to_string(VerdictKind kind);

struct ClassifyBudgets {
  int kernel_max_len = 8;
  long kernel_max_nodes = 1000000;
};

struct Verdict {
  VerdictKind kind;
  int image_rank = 0;
  std::optional<int> index;          // finite index of the image, when finite
  std::optional<Word> kernel_element;  // non_injective witness, when found
  bool kernel_search_exhausted = false;
};

/// Exact decision: injectivity via the rank of the folded image core,
/// surjectivity via the covering index. Only the non-injectivity witness is
/// a bounded search (reported via kernel_search_exhausted, never guessed).
Verdict classify(const Homomorphism& hom, const ClassifyBudgets& budgets = {});

/// Witness that a proper finite-index image is distorted (carries the
/// unbounded set {h1^k h2^-k} to a bounded set).
struct DistortionWitness {
  Word h1, h2;      // source elements with conjugate images
  Word u;           // conjugator outside the image
  Word g1, g2;      // images: g1 = x^k y^l, g2 = u g1 u^{-1}
  long k = 0, l = 0;
  CountingQm separating_qm;  // on the source; homogenised values differ
  bool verified = false;
};

DistortionWitness distortion_witness(const Homomorphism& hom);

struct DistortionGrowthRow {
  int k;
  Rational source_lower;  // k |delta psi_bar| / lipschitz_bound
  int image_upper;        // 2 * norm_upper(u), constant in k
};
std::vector<DistortionGrowthRow> distortion_growth(const DistortionWitness& w,
                                                   const Homomorphism& hom, int kmax);

/// Witness that an infinite-index image is not quasi-surjective: a cyclically
/// reduced killer word whose counting quasi-morphism vanishes on the image.
struct QsurFailureWitness {
  Word killer;  // cyclically reduced, verified on the image graph
  QmConstants constants;
  bool verified = false;
};

QsurFailureWitness qsur_failure_witness(const Homomorphism& hom);

struct QsurGrowthRow {
  int k;
  Rational distance_lower;  // lower bound on d(w^k, image)
};
std::vector<QsurGrowthRow> qsur_growth(const QsurFailureWitness& w, const Homomorphism& hom,
                                       int kmax);

}  // namespace fg
