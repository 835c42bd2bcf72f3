#pragma once

// JSON encodings of the public value types (words, rational values, norm
// bounds, graphs, verdicts). Kept apart from the core headers so the library
// proper does not depend on the JSON vendor header.

#include <json.hpp>

#include "fg/homomorphism.hpp"
#include "fg/norm.hpp"
#include "fg/rational.hpp"
#include "fg/stallings.hpp"
#include "fg/word.hpp"

namespace fg {

inline nlohmann::json to_json(const Word& w) {
  return {{"rank", w.rank().value()}, {"word", w.str()}};
}

inline nlohmann::json to_json(const Rational& q) {
  return {{"num", to_int64(numerator(q))}, {"den", to_int64(denominator(q))}};
}

inline nlohmann::json to_json(const NormFactor& f) {
  return {{"conjugator", f.conjugator.str()}, {"generator", std::string(1, f.generator.to_char())}};
}

inline nlohmann::json to_json(const NormBounds& b) {
  nlohmann::json cert = nlohmann::json::array();
  for (const NormFactor& f : b.upper.certificate) cert.push_back(to_json(f));
  nlohmann::json out = {{"lower", b.lower.value},
                        {"upper", b.upper.value},
                        {"certificates",
                         {{"lower", b.lower.certificate}, {"upper", cert}}}};
  if (b.exact) out["exact"] = *b.exact;
  return out;
}

inline nlohmann::json to_json(const StallingsGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int lab = 1; lab <= g.rank().value(); ++lab) {
      auto t = g.step(v, Letter(lab, 1));
      if (t) edges.push_back({{"src", v}, {"dst", *t}, {"label", std::string(1, Letter(lab, 1).to_char())}});
    }
  }
  return {{"rank", g.rank().value()},
          {"vertices", g.vertex_count()},
          {"base", g.base()},
          {"edges", edges}};
}

inline nlohmann::json to_json(const MembershipWitness& w) {
  nlohmann::json factors = nlohmann::json::array();
  for (auto& [j, s] : w.factors) factors.push_back({{"generator", j + 1}, {"exponent", s}});
  return {{"factors", factors}};
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out = {{"kind", to_string(v.kind)}, {"image_rank", v.image_rank}};
  if (v.index) out["index"] = *v.index;
  if (v.kernel_element) out["kernel_element"] = to_json(*v.kernel_element);
  if (v.kernel_search_exhausted) out["kernel_search_exhausted"] = true;
  return out;
}

inline nlohmann::json to_json(const DistortionWitness& w) {
  return {{"h1", to_json(w.h1)},
          {"h2", to_json(w.h2)},
          {"u", to_json(w.u)},
          {"g1", to_json(w.g1)},
          {"g2", to_json(w.g2)},
          {"k", w.k},
          {"l", w.l},
          {"separating_pattern", to_json(w.separating_qm.pattern())},
          {"verified", w.verified}};
}

inline nlohmann::json to_json(const QsurFailureWitness& w) {
  return {{"killer_word", to_json(w.killer)},
          {"generator_bound", to_json(w.constants.generator_bound)},
          {"defect_bound", to_json(w.constants.defect_bound)},
          {"lipschitz_bound", to_json(w.constants.lipschitz_bound)},
          {"verified", w.verified}};
}

}  // namespace fg
