#pragma once

// Finite-rank computations in the infinite dihedral group Z2 * Z2: the
// canonical quotient pi: F_2 -> Z2 * Z2, the conjugation-invariant norm with
// respect to the images of the standard generators (diameter 2), and
// norm-preserving lifts back to F_2.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fg/norm.hpp"
#include "fg/word.hpp"

namespace fg {

/// An element of Z2 * Z2: an alternating word in the two involutions.
class DihedralElement {
 public:
  static DihedralElement identity() { return DihedralElement({}); }
  /// Letters 'a'/'A' and 'b'/'B' both name the involutions (they are their
  /// own inverses); adjacent equal letters cancel.
  static DihedralElement parse(std::string_view text);
  static DihedralElement from_letters(const std::vector<uint8_t>& letters);

  const std::vector<uint8_t>& letters() const { return letters_; }  // 0 = a-bar, 1 = b-bar
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  DihedralElement operator*(const DihedralElement& other) const;
  DihedralElement inverse() const;  // reverse

  std::string str() const;

  friend bool operator==(const DihedralElement& x, const DihedralElement& y) {
    return x.letters_ == y.letters_;
  }
  friend bool operator!=(const DihedralElement& x, const DihedralElement& y) { return !(x == y); }

 private:
  explicit DihedralElement(std::vector<uint8_t> l) : letters_(std::move(l)) {}
  std::vector<uint8_t> letters_;
};

/// pi: F_2 -> Z2 * Z2, sending a^{+-1} to a-bar and b^{+-1} to b-bar.
DihedralElement dihedral_project(const Word& y);

/// Exact conjugation-invariant norm in Z2 * Z2 w.r.t. {a-bar, b-bar},
/// computed by brute-force search over products of at most two conjugates of
/// generators (the diameter is 2). Throws if the search bound is ever beaten.
int dihedral_norm(const DihedralElement& x, int conjugator_budget = 8);

struct DihedralLift {
  Word lift;                          // pi(lift) == x
  std::vector<NormFactor> certificate;  // <= 2 conjugate-of-generator factors
};

/// A lift x-tilde in F_2 with ||x||_T = ||x-tilde||_S; the certificate is an
/// explicit factorization matching dihedral_norm(x), and the abelianisation
/// lower bound of the lift pinches it.
DihedralLift dihedral_lift(const DihedralElement& x);

}  // namespace fg
