#include "fg/dihedral.hpp"

#include <stdexcept>

namespace fg {

namespace {

void push_involution(std::vector<uint8_t>& stack, uint8_t l) {
  if (!stack.empty() && stack.back() == l)
    stack.pop_back();
  else
    stack.push_back(l);
}

// Alternating words of the given length (two per positive length).
std::vector<DihedralElement> alternating_of_length(int len) {
  std::vector<DihedralElement> out;
  if (len == 0) {
    out.push_back(DihedralElement::identity());
    return out;
  }
  for (uint8_t first : {0, 1}) {
    std::vector<uint8_t> letters;
    for (int i = 0; i < len; ++i) letters.push_back((first + i) % 2);
    out.push_back(DihedralElement::from_letters(letters));
  }
  return out;
}

}  // namespace

DihedralElement DihedralElement::parse(std::string_view text) {
  if (text == "1") return identity();
  std::vector<uint8_t> stack;
  for (char c : text) {
    uint8_t l;
    if (c == 'a' || c == 'A')
      l = 0;
    else if (c == 'b' || c == 'B')
      l = 1;
    else
      throw std::invalid_argument("DihedralElement: letters must be a or b");
    push_involution(stack, l);
  }
  return DihedralElement(std::move(stack));
}

DihedralElement DihedralElement::from_letters(const std::vector<uint8_t>& letters) {
  std::vector<uint8_t> stack;
  for (uint8_t l : letters) {
    if (l > 1) throw std::invalid_argument("DihedralElement: letter out of range");
    push_involution(stack, l);
  }
  return DihedralElement(std::move(stack));
}

DihedralElement DihedralElement::operator*(const DihedralElement& other) const {
  std::vector<uint8_t> stack = letters_;
  for (uint8_t l : other.letters_) push_involution(stack, l);
  return DihedralElement(std::move(stack));
}

DihedralElement DihedralElement::inverse() const {
  std::vector<uint8_t> rev(letters_.rbegin(), letters_.rend());
  return DihedralElement(std::move(rev));
}

std::string DihedralElement::str() const {
  std::string out;
  for (uint8_t l : letters_) out.push_back(l == 0 ? 'a' : 'b');
  return out;
}

DihedralElement dihedral_project(const Word& y) {
  if (y.rank().value() != 2) throw std::invalid_argument("dihedral_project: needs rank 2");
  std::vector<uint8_t> stack;
  for (Letter l : y.letters()) push_involution(stack, static_cast<uint8_t>(l.generator() - 1));
  return DihedralElement::from_letters(stack);
}

int dihedral_norm(const DihedralElement& x, int conjugator_budget) {
  if (x.is_identity()) return 0;
  // Conjugates of the generators with bounded conjugators.
  std::vector<DihedralElement> conjugates;
  for (int len = 0; len <= conjugator_budget; ++len) {
    for (const DihedralElement& w : alternating_of_length(len)) {
      for (uint8_t s : {0, 1}) {
        DihedralElement c = w * DihedralElement::from_letters({s}) * w.inverse();
        conjugates.push_back(c);
      }
    }
  }
  for (const DihedralElement& c : conjugates)
    if (c == x) return 1;
  for (const DihedralElement& c : conjugates)
    for (const DihedralElement& d : conjugates)
      if (c * d == x) return 2;
  throw std::logic_error("dihedral_norm: element not a product of two conjugates within budget");
}

DihedralLift dihedral_lift(const DihedralElement& x) {
  Rank r2(2);
  auto lift_odd = [&](const std::vector<uint8_t>& letters) -> NormFactor {
    // An odd alternating word equals (prefix) middle (prefix reversed), so it
    // is the conjugate of its middle letter; lift the prefix letterwise to
    // positive generators.
    int half = (static_cast<int>(letters.size()) - 1) / 2;
    std::vector<Letter> prefix;
    for (int i = 0; i < half; ++i) prefix.push_back(Letter(letters[static_cast<size_t>(i)] + 1, 1));
    Letter middle(letters[static_cast<size_t>(half)] + 1, 1);
    return NormFactor{Word::reduce(r2, prefix), middle};
  };

  DihedralLift out{Word::identity(r2), {}};
  const auto& v = x.letters();
  if (x.is_identity()) return out;
  if (x.length() % 2 == 1) {
    NormFactor f = lift_odd(v);
    out.certificate.push_back(f);
    out.lift = f.value();
  } else {
    std::vector<uint8_t> head(v.begin(), v.end() - 1);
    NormFactor f1 = lift_odd(head);
    NormFactor f2{Word::identity(r2), Letter(v.back() + 1, 1)};
    out.certificate = {f1, f2};
    out.lift = f1.value() * f2.value();
  }
  if (dihedral_project(out.lift) != x) throw std::logic_error("dihedral_lift: projection mismatch");
  return out;
}

}  // namespace fg
