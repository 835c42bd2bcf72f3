#pragma once

// Certified bounds for the conjugation-invariant word norm ||g||_S (least n
// with g a product of n conjugates of generators or their inverses). There is
// no known closed form; the contract is certified lower/upper bounds that are
// declared exact only when they meet.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fg/quasimorphism.hpp"
#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

/// One factor of an upper-bound certificate: conjugator * generator * conjugator^{-1}.
struct NormFactor {
  Word conjugator;
  Letter generator;
  Word value() const {
    return Word::reduce(conjugator.rank(), std::vector<Letter>{generator}).conjugated_by(conjugator);
  }
};

struct NormUpper {
  int value;
  std::vector<NormFactor> certificate;  // product equals g
};

struct NormLower {
  int value;
  std::string certificate;  // which Lipschitz function / argument justified it
};

struct NormBounds {
  NormLower lower;
  NormUpper upper;
  std::optional<int> exact;  // set iff lower == upper
};

/// Greedy cancellation-maximizing peeling over conjugators of length at most
/// `conjugator_budget`, computed on the cyclic core so that bounds are
/// conjugation-invariant; never worse than the letterwise factorization l(g).
NormUpper norm_upper(const Word& g, int conjugator_budget = 3);

/// Best of: abelianisation L1 bound (each factor moves the abelianisation by
/// one unit in one coordinate), counting quasi-morphism bounds
/// ceil(|psi_bar(g)| / (B + D)), nontriviality, and the parity of the total
/// exponent sum.
NormLower norm_lower(const Word& g, std::span<const CountingQm> witnesses = {});

/// Value when the certified bounds meet under the given budget; nullopt means
/// "unknown", never a guess.
std::optional<int> norm_exact_small(const Word& g, int conjugator_budget = 3);

NormBounds norm_bounds(const Word& g, int conjugator_budget = 3,
                       std::span<const CountingQm> witnesses = {});

/// Lower bounds on ||w^k|| for a cyclically reduced w, from psi_bar_w(w^k) = k
/// and |psi_bar(g)| <= (B + D) ||g||; strictly increasing and unbounded.
std::vector<std::pair<int, Rational>> normal_subgroup_growth(const Word& w, int kmax);

}  // namespace fg
