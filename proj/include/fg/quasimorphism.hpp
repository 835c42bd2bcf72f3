#pragma once

// Little counting quasi-morphisms psi_w(g) = c_w(g) - c_{w^{-1}}(g), their
// exact homogenisation, Lipschitz constants, and the separation-witness
// constructor for elements generating non-conjugate cyclic subgroups.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

class CountingQm {
 public:
  /// Pattern must be a nonempty reduced word.
  explicit CountingQm(Word pattern);

  const Word& pattern() const { return pattern_; }
  Rank rank() const { return pattern_.rank(); }

  /// psi_w(g) = c_w(g) - c_{w^{-1}}(g); |psi| <= floor(l(g)/l(w)).
  int64_t psi(const Word& g) const;

 private:
  Word pattern_;
  Word pattern_inverse_;
};

/// Exact value of the homogenisation lim psi_w(g^n)/n.
///
/// For the cyclically reduced core c of g the greedy occurrence scan over the
/// periodic word c^inf is a deterministic map on scan offsets mod l(c), so it
/// enters a cycle after at most l(c) events; the occurrence density over one
/// cycle gives the limit as an exact rational. Values on conjugates agree
/// because homogeneous quasi-morphisms are class functions.
Rational homogenize(const CountingQm& qm, const Word& g, std::size_t step_budget = 1 << 22);

struct QmConstants {
  Rational generator_bound;  // B = max_i |homogenized value on x_i|
  Rational defect_bound;     // D for the homogenisation: 2 * (counting defect 2) = 4
  Rational lipschitz_bound;  // B + 2D
};

QmConstants lipschitz_constants(const CountingQm& qm);

/// max over samples of |psi(g) - psi(g h) + psi(h)|; always <= 2.
Rational defect_probe(const CountingQm& qm, std::span<const std::pair<Word, Word>> samples);

/// For <g>, <h> non-conjugate cyclic subgroups, returns a counting
/// quasi-morphism whose homogenisation is exactly 1 on the longer input and
/// strictly inside (-1, 1) on the other. Throws std::domain_error when the
/// subgroups are conjugate (in particular when both inputs are the identity).
CountingQm separation_witness(const Word& g, const Word& h);

}  // namespace fg
