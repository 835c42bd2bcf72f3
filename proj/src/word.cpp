#include "fg/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace fg {

Rank::Rank(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Rank: need n >= 1");
}

Letter::Letter(int generator, int sign) {
  if (generator < 1) throw std::invalid_argument("Letter: generator index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("Letter: sign must be +1 or -1");
  code_ = sign > 0 ? generator : -generator;
}

Letter Letter::from_code(int32_t code) {
  if (code == 0) throw std::invalid_argument("Letter: code must be nonzero");
  return Letter(code);
}

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 1, 1);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 1, -1);
  throw std::invalid_argument(std::string("Letter: unexpected character '") + c + "'");
}

char Letter::to_char() const {
  int g = generator();
  if (g > 26) throw std::invalid_argument("Letter: no text syntax beyond generator 26");
  return static_cast<char>((code_ > 0 ? 'a' : 'A') + g - 1);
}

namespace {

void check_letter(Rank rank, Letter l) {
  if (l.generator() > rank.value())
    throw std::invalid_argument("Word: letter index out of range for rank");
}

// Push with free cancellation against the top of the stack.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == l.inverse())
    stack.pop_back();
  else
    stack.push_back(l);
}

}  // namespace

Word Word::identity(Rank rank) { return Word(rank, {}); }

Word Word::reduce(Rank rank, std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(rank, l);
    push_reduced(stack, l);
  }
  return Word(rank, std::move(stack));
}

Word Word::parse(Rank rank, std::string_view text) {
  if (text == "1") return identity(rank);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(Letter::from_char(c));
  return reduce(rank, letters);
}

Word Word::operator*(const Word& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("Word: rank mismatch in product");
  std::vector<Letter> stack = letters_;
  stack.reserve(letters_.size() + other.letters_.size());
  for (Letter l : other.letters_) push_reduced(stack, l);
  return Word(rank_, std::move(stack));
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return Word(rank_, std::move(inv));
}

Word Word::pow(int k) const {
  Word base = k >= 0 ? *this : inverse();
  int reps = k >= 0 ? k : -k;
  Word acc = identity(rank_);
  for (int i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugated_by(const Word& u) const { return u * *this * u.inverse(); }

bool Word::is_cyclically_reduced() const {
  if (letters_.size() < 2) return true;
  return letters_.front() != letters_.back().inverse();
}

long Word::exponent_sum(int generator) const {
  long sum = 0;
  for (Letter l : letters_)
    if (l.generator() == generator) sum += l.sign();
  return sum;
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.to_char());
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.rank_ == b.rank_ && a.letters_ == b.letters_;
}

bool operator<(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    int ka = a.letters_[static_cast<size_t>(i)].order_key();
    int kb = b.letters_[static_cast<size_t>(i)].order_key();
    if (ka != kb) return ka < kb;
  }
  return false;
}

CyclicWord CyclicWord::from_cyclically_reduced(const Word& w) {
  if (!w.is_cyclically_reduced())
    throw std::invalid_argument("CyclicWord: input is not cyclically reduced");
  const auto& v = w.letters();
  int n = w.length();
  if (n <= 1) return CyclicWord(w);
  // Least rotation under the fixed letter order.
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      int kr = v[static_cast<size_t>((r + i) % n)].order_key();
      int kb = v[static_cast<size_t>((best + i) % n)].order_key();
      if (kr != kb) {
        if (kr < kb) best = r;
        break;
      }
    }
  }
  std::vector<Letter> rotated;
  rotated.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rotated.push_back(v[static_cast<size_t>((best + i) % n)]);
  return CyclicWord(Word::reduce(w.rank(), rotated));
}

CyclicReduction cyclic_reduce(const Word& g) {
  const auto& v = g.letters();
  int i = 0, j = g.length() - 1;
  while (i < j && v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)].inverse()) {
    ++i;
    --j;
  }
  std::vector<Letter> mid(v.begin() + i, v.begin() + j + 1);
  if (i > j) mid.clear();
  Word stripped = Word::reduce(g.rank(), mid);
  CyclicWord core = CyclicWord::from_cyclically_reduced(stripped);
  // Rotating the core shifts the conjugator: g = (strip p) (q p) (strip p)^{-1}
  // where mid = p q and the canonical rotation is q p.
  int rot = 0;
  if (!stripped.is_identity()) {
    // Find a rotation offset realizing the canonical word.
    int n = stripped.length();
    for (int r = 0; r < n; ++r) {
      bool match = true;
      for (int t = 0; t < n && match; ++t)
        match = stripped.letter((r + t) % n) == core.word().letter(t);
      if (match) {
        rot = r;
        break;
      }
    }
  }
  std::vector<Letter> conj(v.begin(), v.begin() + i);
  for (int t = 0; t < rot; ++t) conj.push_back(stripped.letter(t));
  return CyclicReduction{core, Word::reduce(g.rank(), conj)};
}

int count_disjoint(const Word& pattern, const Word& g) {
  if (pattern.is_identity()) throw std::invalid_argument("count_disjoint: empty pattern");
  if (pattern.rank() != g.rank()) throw std::invalid_argument("count_disjoint: rank mismatch");
  int m = pattern.length(), L = g.length();
  int count = 0;
  int i = 0;
  while (i + m <= L) {
    bool match = true;
    for (int t = 0; t < m; ++t)
      if (g.letter(i + t) != pattern.letter(t)) {
        match = false;
        break;
      }
    if (match) {
      ++count;
      i += m;
    } else {
      ++i;
    }
  }
  return count;
}

bool are_conjugate(const Word& g, const Word& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("are_conjugate: rank mismatch");
  return cyclic_reduce(g).core == cyclic_reduce(h).core;
}

PrimitiveRoot primitive_root(const Word& g) {
  if (g.is_identity()) throw std::invalid_argument("primitive_root: identity input");
  // g = u c u^{-1} with c cyclically reduced; powers of c concatenate without
  // cancellation, so proper powers show up as string periods of c.
  const auto& v = g.letters();
  int i = 0, j = g.length() - 1;
  while (i < j && v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)].inverse()) {
    ++i;
    --j;
  }
  std::vector<Letter> mid(v.begin() + i, v.begin() + j + 1);
  int L = static_cast<int>(mid.size());
  int period = L;
  for (int p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool ok = true;
    for (int t = p; t < L && ok; ++t) ok = mid[static_cast<size_t>(t)] == mid[static_cast<size_t>(t % p)];
    if (ok) {
      period = p;
      break;
    }
  }
  std::vector<Letter> root_letters(v.begin(), v.begin() + i);
  root_letters.insert(root_letters.end(), mid.begin(), mid.begin() + period);
  for (int t = i - 1; t >= 0; --t) root_letters.push_back(v[static_cast<size_t>(t)].inverse());
  return PrimitiveRoot{Word::reduce(g.rank(), root_letters), L / period};
}

}  // namespace fg
