#include "fg/quasimorphism.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

CountingQm::CountingQm(Word pattern)
    : pattern_(std::move(pattern)), pattern_inverse_(pattern_.inverse()) {
  if (pattern_.is_identity()) throw std::domain_error("CountingQm: pattern must be nonempty");
}

int64_t CountingQm::psi(const Word& g) const {
  if (g.rank() != rank()) throw std::invalid_argument("psi: rank mismatch");
  return count_disjoint(pattern_, g) - count_disjoint(pattern_inverse_, g);
}

namespace {

// Exact occurrence density of `pattern` under the greedy scan of the infinite
// periodic word core^inf, times l(core): lim c_pattern(core^n)/n.
Rational greedy_density_times_core(const Word& pattern, const Word& core, std::size_t budget) {
  const int L = core.length();
  const int m = pattern.length();
  if (static_cast<std::size_t>(L) + 1 > budget)
    throw BudgetExhausted("homogenize: core longer than step budget");
  struct Event {
    long long pos;
    long long count;
  };
  std::vector<std::optional<Event>> seen(static_cast<size_t>(L));
  long long pos = 0, count = 0;
  for (;;) {
    int s = static_cast<int>(pos % L);
    if (seen[static_cast<size_t>(s)]) {
      long long dp = pos - seen[static_cast<size_t>(s)]->pos;
      long long dc = count - seen[static_cast<size_t>(s)]->count;
      return Rational(BigInt(dc) * L, BigInt(dp));
    }
    seen[static_cast<size_t>(s)] = Event{pos, count};
    bool match = true;
    for (int t = 0; t < m; ++t) {
      if (pattern.letter(t) != core.letter(static_cast<int>((pos + t) % L))) {
        match = false;
        break;
      }
    }
    if (match) {
      pos += m;
      ++count;
    } else {
      ++pos;
    }
  }
}

}  // namespace

Rational homogenize(const CountingQm& qm, const Word& g, std::size_t step_budget) {
  if (g.rank() != qm.rank()) throw std::invalid_argument("homogenize: rank mismatch");
  if (g.is_identity()) return Rational(0);
  const Word core = cyclic_reduce(g).core.word();
  Rational fwd = greedy_density_times_core(qm.pattern(), core, step_budget);
  Rational bwd = greedy_density_times_core(qm.pattern().inverse(), core, step_budget);
  return fwd - bwd;
}

QmConstants lipschitz_constants(const CountingQm& qm) {
  QmConstants c;
  c.generator_bound = 0;
  for (int i = 1; i <= qm.rank().value(); ++i) {
    Word gen = Word::reduce(qm.rank(), std::vector<Letter>{Letter(i, 1)});
    Rational v = abs_rational(homogenize(qm, gen));
    if (v > c.generator_bound) c.generator_bound = v;
  }
  // The counting quasi-morphism has defect at most 2; the homogenisation of a
  // defect-D quasi-morphism has defect at most 2D.
  c.defect_bound = 4;
  c.lipschitz_bound = c.generator_bound + 2 * c.defect_bound;
  return c;
}

Rational defect_probe(const CountingQm& qm, std::span<const std::pair<Word, Word>> samples) {
  Rational worst = 0;
  for (const auto& [g, h] : samples) {
    int64_t d = qm.psi(g) - qm.psi(g * h) + qm.psi(h);
    Rational v = d < 0 ? Rational(-d) : Rational(d);
    if (v > worst) worst = v;
  }
  return worst;
}

CountingQm separation_witness(const Word& g, const Word& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("separation_witness: rank mismatch");
  if (are_conjugate(g, h) || are_conjugate(g, h.inverse()))
    throw std::domain_error("separation_witness: <g> and <h> are conjugate subgroups");
  CyclicReduction cg = cyclic_reduce(g), ch = cyclic_reduce(h);
  const bool g_side = cg.core.length() >= ch.core.length();  // ties go to g
  const Word& pattern = g_side ? cg.core.word() : ch.core.word();
  CountingQm qm(pattern);
  Rational on_pattern_side = homogenize(qm, g_side ? g : h);
  Rational on_other_side = homogenize(qm, g_side ? h : g);
  if (on_pattern_side != 1 || abs_rational(on_other_side) >= 1)
    throw std::logic_error("separation_witness: separation property failed to verify");
  return qm;
}

}  // namespace fg
