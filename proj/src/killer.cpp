#include "fg/killer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace fg {

namespace {

std::vector<Letter> slots_in_order(Rank rank) {
  std::vector<Letter> slots;
  for (int lab = 1; lab <= rank.value(); ++lab) {
    slots.push_back(Letter(lab, 1));
    slots.push_back(Letter(lab, -1));
  }
  return slots;
}

// Shortest non-backtracking continuation from (start vertex, arrival code) to
// any vertex satisfying `accept`; empty when the start already does.
std::optional<std::vector<Letter>> search_to(const StallingsGraph& graph, int start,
                                             int32_t last_code, auto&& accept) {
  if (accept(start)) return std::vector<Letter>{};
  const auto slots = slots_in_order(graph.rank());
  std::map<std::pair<int, int32_t>, std::pair<int, int32_t>> pred;  // state -> predecessor state
  std::map<std::pair<int, int32_t>, Letter> pred_letter;
  std::queue<std::pair<int, int32_t>> queue;
  std::pair<int, int32_t> init{start, last_code};
  queue.push(init);
  pred[init] = init;
  while (!queue.empty()) {
    auto [v, last] = queue.front();
    queue.pop();
    for (Letter l : slots) {
      if (last != 0 && l.code() == -last) continue;
      auto nxt = graph.step(v, l);
      if (!nxt) continue;
      std::pair<int, int32_t> state{*nxt, l.code()};
      if (pred.count(state)) continue;
      pred[state] = {v, last};
      pred_letter.emplace(state, l);
      if (accept(*nxt)) {
        std::vector<Letter> letters;
        auto cur = state;
        while (cur != init) {
          letters.push_back(pred_letter.at(cur));
          cur = pred.at(cur);
        }
        std::reverse(letters.begin(), letters.end());
        return letters;
      }
      queue.push(state);
    }
  }
  return std::nullopt;
}

}  // namespace

GraphPath extend_reduced_path(const StallingsGraph& graph, const GraphPath& prefix, int target) {
  if (graph.min_valence() < 2)
    throw std::domain_error("extend_reduced_path: a vertex has valence < 2");
  // Validate the prefix is a reduced path in the graph.
  int cur = prefix.start;
  int32_t last = 0;
  for (Letter l : prefix.letters) {
    if (last != 0 && l.code() == -last)
      throw std::invalid_argument("extend_reduced_path: prefix is not reduced");
    auto nxt = graph.step(cur, l);
    if (!nxt) throw std::invalid_argument("extend_reduced_path: prefix leaves the graph");
    cur = *nxt;
    last = l.code();
  }
  if (cur != prefix.end) throw std::invalid_argument("extend_reduced_path: inconsistent prefix");

  auto suffix = search_to(graph, cur, last, [&](int v) { return v == target; });
  if (!suffix)
    throw std::logic_error("extend_reduced_path: target unreachable; graph violates the valence hypothesis");
  GraphPath out = prefix;
  for (Letter l : *suffix) {
    out.letters.push_back(l);
    out.end = *graph.step(out.end, l);
  }
  return out;
}

bool verify_killer(const StallingsGraph& graph, const Word& w) {
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.read(v, w).stayed) return false;
  return true;
}

KillerWord killer_word(const StallingsGraph& graph, std::vector<KillerTraceStep>* trace) {
  if (graph.index())
    throw std::domain_error("killer_word: subgroup has finite index, no killer word exists");
  if (graph.min_valence() < 2)
    throw std::domain_error("killer_word: graph has a vertex of valence < 2");

  Word w = Word::identity(graph.rank());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    auto rr = graph.read(v, w);
    if (!rr.stayed) {
      if (trace) trace->push_back({v + 1, v, true, Word::identity(graph.rank()), w});
      continue;
    }
    int32_t last = w.is_identity() ? 0 : w.letter(w.length() - 1).code();
    auto suffix = search_to(graph, rr.end, last, [&](int u) { return graph.is_bad(u); });
    if (!suffix) throw std::logic_error("killer_word: no bad vertex reachable");
    int bad = rr.end;
    for (Letter l : *suffix) bad = *graph.step(bad, l);

    // The lowest missing slot; it cannot backtrack, since the arrival edge is
    // present in the graph while the slot is not.
    std::optional<Letter> missing;
    for (Letter l : slots_in_order(graph.rank())) {
      if (!graph.step(bad, l)) {
        missing = l;
        break;
      }
    }
    if (!missing) throw std::logic_error("killer_word: bad vertex has no missing slot");
    int32_t arrive = suffix->empty() ? last : suffix->back().code();
    if (arrive != 0 && missing->code() == -arrive)
      throw std::logic_error("killer_word: missing slot would backtrack");

    std::vector<Letter> appended = *suffix;
    appended.push_back(*missing);
    Word extension = Word::reduce(graph.rank(), appended);
    Word next = w * extension;
    if (next.length() != w.length() + extension.length() ||
        extension.length() != static_cast<int>(appended.size()))
      throw std::logic_error("killer_word: extension unexpectedly cancelled");
    w = next;
    if (trace) trace->push_back({v + 1, v, false, extension, w});
  }

  if (!verify_killer(graph, w)) throw std::logic_error("killer_word: verification failed");
  return KillerWord{w, true};
}

KillerWord cyclically_reduced_killer(const StallingsGraph& graph, const KillerWord& w) {
  if (graph.rank().value() < 2)
    throw std::domain_error("cyclically_reduced_killer: requires rank >= 2");
  if (!w.verified) throw std::domain_error("cyclically_reduced_killer: input not verified");
  if (w.word.is_identity())
    throw std::invalid_argument("cyclically_reduced_killer: empty word");
  if (w.word.is_cyclically_reduced()) return w;

  Letter first = w.word.letter(0);
  Letter last = w.word.letter(w.word.length() - 1);
  for (Letter l : slots_in_order(graph.rank())) {
    if (l == last.inverse()) continue;  // would cancel
    if (l.inverse() == first) continue;  // would stay cyclically unreduced
    std::vector<Letter> letters = w.word.letters();
    letters.push_back(l);
    Word candidate = Word::reduce(graph.rank(), letters);
    if (!verify_killer(graph, candidate))
      throw std::logic_error("cyclically_reduced_killer: superword failed verification");
    return KillerWord{candidate, true};
  }
  throw std::logic_error("cyclically_reduced_killer: no extending letter found");
}

}  // namespace fg
