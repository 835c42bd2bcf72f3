#include "fg/homomorphism.hpp"

#include <stdexcept>

#include "fg/errors.hpp"

namespace fg {

Homomorphism::Homomorphism(Rank source, Rank target, std::vector<Word> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.value())
    throw std::invalid_argument("Homomorphism: need one image per source generator");
  for (const Word& w : images_)
    if (w.rank() != target_) throw std::invalid_argument("Homomorphism: image rank mismatch");
}

Word Homomorphism::apply(const Word& g) const {
  if (g.rank() != source_) throw std::invalid_argument("apply: rank mismatch");
  Word out = Word::identity(target_);
  for (Letter l : g.letters()) {
    const Word& im = images_[static_cast<size_t>(l.generator() - 1)];
    out = out * (l.sign() > 0 ? im : im.inverse());
  }
  return out;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::isomorphism: return "isomorphism";
    case VerdictKind::non_injective: return "non_injective";
    case VerdictKind::finite_index_proper: return "finite_index_proper";
    case VerdictKind::infinite_index: return "infinite_index";
  }
  return "?";
}

namespace {

// Shortlex enumeration of source words until a nontrivial kernel element is
// found or the budget runs out.
std::pair<std::optional<Word>, bool> kernel_search(const Homomorphism& hom,
                                                   const ClassifyBudgets& budgets) {
  Rank m = hom.source_rank();
  long nodes = 0;
  std::vector<Letter> cur;
  std::optional<Word> found;
  auto rec = [&](auto&& self, int remaining) -> bool {
    if (found || nodes > budgets.kernel_max_nodes) return found.has_value();
    if (!cur.empty()) {
      ++nodes;
      Word w = Word::reduce(m, cur);
      if (hom.apply(w).is_identity()) {
        found = w;
        return true;
      }
    }
    if (remaining == 0) return false;
    for (int lab = 1; lab <= m.value(); ++lab) {
      for (int s : {1, -1}) {
        Letter l(lab, s);
        if (!cur.empty() && cur.back() == l.inverse()) continue;
        cur.push_back(l);
        bool done = self(self, remaining - 1);
        cur.pop_back();
        if (done) return true;
      }
    }
    return false;
  };
  // iterative deepening keeps the search shortlex-shortest-first
  for (int len = 1; len <= budgets.kernel_max_len && !found; ++len) {
    nodes = 0;
    cur.clear();
    rec(rec, len);
    if (nodes > budgets.kernel_max_nodes) return {std::nullopt, true};
  }
  return {found, false};
}

// Shortest word outside the image, by shortlex search with membership tests.
Word shortest_outside(const StallingsGraph& graph, int max_len = 16) {
  Rank n = graph.rank();
  std::vector<Letter> cur;
  std::optional<Word> found;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (found) return;
    if (!cur.empty()) {
      Word w = Word::reduce(n, cur);
      auto rr = graph.read(0, w);
      if (!(rr.stayed && rr.end == 0)) {
        found = w;
        return;
      }
    }
    if (remaining == 0) return;
    for (int lab = 1; lab <= n.value() && !found; ++lab) {
      for (int s : {1, -1}) {
        Letter l(lab, s);
        if (!cur.empty() && cur.back() == l.inverse()) continue;
        cur.push_back(l);
        self(self, remaining - 1);
        cur.pop_back();
        if (found) return;
      }
    }
  };
  for (int len = 1; len <= max_len && !found; ++len) rec(rec, len);
  if (!found) throw std::logic_error("shortest_outside: no element outside a proper subgroup?");
  return *found;
}

Word witness_to_source(Rank source, const MembershipWitness& w) {
  std::vector<Letter> letters;
  for (auto& [j, s] : w.factors) letters.push_back(Letter(j + 1, s));
  return Word::reduce(source, letters);
}

}  // namespace

Verdict classify(const Homomorphism& hom, const ClassifyBudgets& budgets) {
  StallingsGraph graph = hom.image_graph();
  Verdict v;
  v.image_rank = graph.subgroup_rank();
  v.index = graph.index();

  int m = hom.source_rank().value();
  if (v.image_rank < m) {
    v.kind = VerdictKind::non_injective;
    auto [kernel, exhausted] = kernel_search(hom, budgets);
    v.kernel_element = kernel;
    v.kernel_search_exhausted = exhausted && !kernel;
    return v;
  }
  // image rank == m: the map is injective (a surjection between free groups
  // of the same finite rank is an isomorphism).
  if (v.index && *v.index == 1) {
    v.kind = VerdictKind::isomorphism;
    return v;
  }
  v.kind = v.index ? VerdictKind::finite_index_proper : VerdictKind::infinite_index;
  return v;
}

DistortionWitness distortion_witness(const Homomorphism& hom) {
  if (hom.target_rank().value() < 2)
    throw std::domain_error("distortion_witness: requires target rank >= 2");
  StallingsGraph graph = hom.image_graph();
  Verdict v = classify(hom);
  if (v.kind != VerdictKind::finite_index_proper)
    throw std::domain_error("distortion_witness: image is not a proper finite-index subgroup");

  CosetData cd = graph.coset_data();
  long k = cd.exponents[0], l = cd.exponents[1];
  Rank n = hom.target_rank();
  Word x = Word::parse(n, "a"), y = Word::parse(n, "b");
  Word g1 = x.pow(static_cast<int>(k)) * y.pow(static_cast<int>(l));
  if (primitive_root(g1).exponent != 1)
    throw std::logic_error("distortion_witness: x^k y^l unexpectedly a proper power");

  Word u = shortest_outside(graph);
  Word g2 = g1.conjugated_by(u);

  auto w1 = graph.membership(g1);
  auto w2 = graph.membership(g2);
  if (!w1 || !w2)
    throw std::logic_error("distortion_witness: x^k y^l not in the normal core");
  Word h1 = witness_to_source(hom.source_rank(), *w1);
  Word h2 = witness_to_source(hom.source_rank(), *w2);
  if (hom.apply(h1) != g1 || hom.apply(h2) != g2)
    throw std::logic_error("distortion_witness: preimage verification failed");

  CountingQm qm = separation_witness(h1, h2);  // throws if <h1>,<h2> conjugate
  if (!are_conjugate(g1, g2))
    throw std::logic_error("distortion_witness: images not conjugate");
  if (homogenize(qm, h1) == homogenize(qm, h2))
    throw std::logic_error("distortion_witness: separation failed");

  return DistortionWitness{h1, h2, u, g1, g2, k, l, qm, true};
}

std::vector<DistortionGrowthRow> distortion_growth(const DistortionWitness& w,
                                                   const Homomorphism& hom, int kmax) {
  if (!w.verified) throw std::domain_error("distortion_growth: witness not verified");
  Rational delta = abs_rational(homogenize(w.separating_qm, w.h1) - homogenize(w.separating_qm, w.h2));
  Rational c = lipschitz_constants(w.separating_qm).lipschitz_bound;
  int image_upper = 2 * norm_upper(w.u).value;
  (void)hom;
  std::vector<DistortionGrowthRow> rows;
  rows.reserve(static_cast<size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) rows.push_back({k, Rational(k) * delta / c, image_upper});
  return rows;
}

QsurFailureWitness qsur_failure_witness(const Homomorphism& hom) {
  if (hom.target_rank().value() < 2)
    throw std::domain_error("qsur_failure_witness: requires target rank >= 2");
  StallingsGraph graph = hom.image_graph();
  if (graph.index())
    throw std::domain_error("qsur_failure_witness: image does not have infinite index");

  KillerWord kw = killer_word(graph);
  KillerWord ck = cyclically_reduced_killer(graph, kw);
  CountingQm qm(ck.word);
  if (homogenize(qm, ck.word) != 1)
    throw std::logic_error("qsur_failure_witness: psi_bar_w(w) != 1");
  for (const Word& g : graph.enumerate_elements(8)) {
    if (!g.is_identity() && homogenize(qm, g) != 0)
      throw std::logic_error("qsur_failure_witness: psi_bar_w does not vanish on the image");
  }
  return QsurFailureWitness{ck.word, lipschitz_constants(qm), true};
}

std::vector<QsurGrowthRow> qsur_growth(const QsurFailureWitness& w, const Homomorphism& hom,
                                       int kmax) {
  if (!w.verified) throw std::domain_error("qsur_growth: witness not verified");
  (void)hom;
  Rational c = w.constants.lipschitz_bound;
  std::vector<QsurGrowthRow> rows;
  rows.reserve(static_cast<size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) rows.push_back({k, Rational(k) / c});
  return rows;
}

}  // namespace fg
