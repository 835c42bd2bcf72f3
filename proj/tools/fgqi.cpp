// Command-line surface for the free-group bi-invariant-metric toolkit.
//
// Subcommands: reduce, norm, qm, graph, killer, analyze, experiment.
// Words use the single-character syntax: a..z generators, A..Z inverses,
// "1" for the identity. Exit codes: 0 ok/pass, 1 property violated,
// 2 budget exhausted, 3 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fg/dihedral.hpp"
#include "fg/errors.hpp"
#include "fg/experiments.hpp"
#include "fg/homomorphism.hpp"
#include "fg/json_io.hpp"
#include "fg/killer.hpp"
#include "fg/norm.hpp"
#include "fg/quasimorphism.hpp"
#include "fg/stallings.hpp"
#include "fg/word.hpp"

namespace {

int infer_rank(const std::vector<std::string>& words, int given) {
  if (given > 0) return given;
  int n = 1;
  for (const auto& w : words)
    for (char c : w) {
      if (c >= 'a' && c <= 'z') n = std::max(n, c - 'a' + 1);
      if (c >= 'A' && c <= 'Z') n = std::max(n, c - 'A' + 1);
    }
  return n;
}

std::string display(const fg::Word& w) { return w.is_identity() ? "1" : w.str(); }

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_file);
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in free groups with bi-invariant word metrics"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "write output to a file instead of stdout");

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "reduce a word to normal form");
  std::string reduce_word;
  int reduce_rank = 0;
  std::string reduce_format = "text";
  cmd_reduce->add_option("word", reduce_word)->required();
  cmd_reduce->add_option("--rank", reduce_rank);
  cmd_reduce->add_option("--format", reduce_format)->check(CLI::IsMember({"text", "json"}));

  // norm bounds
  auto* cmd_norm = app.add_subcommand("norm", "certified bi-invariant norm bounds");
  auto* cmd_norm_bounds = cmd_norm->add_subcommand("bounds", "lower/upper bounds with certificates");
  std::string norm_word;
  int norm_rank = 0, norm_budget = 3;
  cmd_norm_bounds->add_option("word", norm_word)->required();
  cmd_norm_bounds->add_option("--rank", norm_rank);
  cmd_norm_bounds->add_option("--budget", norm_budget);

  // qm eval / homog / separate
  auto* cmd_qm = app.add_subcommand("qm", "little counting quasi-morphisms");
  auto* cmd_qm_eval = cmd_qm->add_subcommand("eval", "psi_w(g)");
  auto* cmd_qm_homog = cmd_qm->add_subcommand("homog", "exact homogenisation psi_bar_w(g)");
  auto* cmd_qm_sep = cmd_qm->add_subcommand("separate", "separating quasi-morphism for <g>,<h>");
  std::string qm_pattern, qm_word, qm_g, qm_h;
  int qm_rank = 0;
  cmd_qm_eval->add_option("--pattern,-w", qm_pattern)->required();
  cmd_qm_eval->add_option("word", qm_word)->required();
  cmd_qm_eval->add_option("--rank", qm_rank);
  cmd_qm_homog->add_option("--pattern,-w", qm_pattern)->required();
  cmd_qm_homog->add_option("word", qm_word)->required();
  cmd_qm_homog->add_option("--rank", qm_rank);
  cmd_qm_sep->add_option("first", qm_g)->required();
  cmd_qm_sep->add_option("second", qm_h)->required();
  cmd_qm_sep->add_option("--rank", qm_rank);

  // graph
  auto* cmd_graph = app.add_subcommand("graph", "Stallings subgroup graph");
  std::vector<std::string> graph_gens;
  int graph_rank = 0;
  std::string graph_format = "json";
  cmd_graph->add_option("generators", graph_gens)->required();
  cmd_graph->add_option("--rank", graph_rank);
  cmd_graph->add_option("--format", graph_format)->check(CLI::IsMember({"json", "dot"}));

  // killer
  auto* cmd_killer = app.add_subcommand("killer", "killer word for a subgroup");
  std::vector<std::string> killer_gens;
  int killer_rank = 0;
  bool killer_trace = false;
  cmd_killer->add_option("generators", killer_gens)->required();
  cmd_killer->add_option("--rank", killer_rank);
  cmd_killer->add_flag("--trace", killer_trace);

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "classify a homomorphism F_m -> F_n");
  int an_m = 0, an_n = 0, an_growth = 0;
  std::vector<std::string> an_images;
  cmd_analyze->add_option("--source-rank", an_m)->required();
  cmd_analyze->add_option("--target-rank", an_n)->required();
  cmd_analyze->add_option("--image", an_images)->required();
  cmd_analyze->add_option("--growth", an_growth);

  // experiment
  auto* cmd_exp = app.add_subcommand("experiment", "run a named experiment");
  std::string exp_id, exp_word = "ab";
  int exp_maxlen = 12, exp_ball = 8, exp_kmax = 20, exp_rank = 2;
  bool exp_trace = false;
  cmd_exp->add_option("id", exp_id)->required();
  cmd_exp->add_option("--max-len", exp_maxlen);
  cmd_exp->add_option("--ball", exp_ball);
  cmd_exp->add_option("--word", exp_word);
  cmd_exp->add_option("--kmax", exp_kmax);
  cmd_exp->add_option("--rank", exp_rank);
  cmd_exp->add_flag("--trace", exp_trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*cmd_reduce) {
      fg::Rank rank(infer_rank({reduce_word}, reduce_rank));
      fg::Word w = fg::Word::parse(rank, reduce_word);
      if (reduce_format == "json")
        emit(fg::to_json(w).dump(2), out_file);
      else
        emit(display(w), out_file);
    } else if (*cmd_norm_bounds) {
      fg::Rank rank(infer_rank({norm_word}, norm_rank));
      fg::Word w = fg::Word::parse(rank, norm_word);
      emit(fg::to_json(fg::norm_bounds(w, norm_budget)).dump(2), out_file);
    } else if (*cmd_qm_eval) {
      fg::Rank rank(infer_rank({qm_pattern, qm_word}, qm_rank));
      fg::CountingQm qm(fg::Word::parse(rank, qm_pattern));
      emit(std::to_string(qm.psi(fg::Word::parse(rank, qm_word))), out_file);
    } else if (*cmd_qm_homog) {
      fg::Rank rank(infer_rank({qm_pattern, qm_word}, qm_rank));
      fg::CountingQm qm(fg::Word::parse(rank, qm_pattern));
      fg::Rational v = fg::homogenize(qm, fg::Word::parse(rank, qm_word));
      emit(nlohmann::json{{"value", fg::to_json(v)}}.dump(2), out_file);
    } else if (*cmd_qm_sep) {
      fg::Rank rank(infer_rank({qm_g, qm_h}, qm_rank));
      fg::Word g = fg::Word::parse(rank, qm_g), h = fg::Word::parse(rank, qm_h);
      fg::CountingQm qm = fg::separation_witness(g, h);
      nlohmann::json out = {{"pattern", fg::to_json(qm.pattern())},
                            {"value_on_g", fg::to_json(fg::homogenize(qm, g))},
                            {"value_on_h", fg::to_json(fg::homogenize(qm, h))}};
      emit(out.dump(2), out_file);
    } else if (*cmd_graph) {
      fg::Rank rank(infer_rank(graph_gens, graph_rank));
      std::vector<fg::Word> gens;
      for (const auto& s : graph_gens) gens.push_back(fg::Word::parse(rank, s));
      fg::StallingsGraph g = fg::StallingsGraph::build(rank, gens);
      emit(graph_format == "dot" ? g.to_dot() : fg::to_json(g).dump(2), out_file);
    } else if (*cmd_killer) {
      fg::Rank rank(infer_rank(killer_gens, killer_rank));
      std::vector<fg::Word> gens;
      for (const auto& s : killer_gens) gens.push_back(fg::Word::parse(rank, s));
      fg::StallingsGraph g = fg::StallingsGraph::build(rank, gens);
      if (g.vertex_count() == 1 && g.edge_count() == 0) {
        // Trivial subgroup: any single unread generator letter kills it.
        emit("graph is a single vertex; any generator letter is a killer word (e.g. \"a\")",
             out_file);
        return 0;
      }
      std::vector<fg::KillerTraceStep> trace;
      fg::KillerWord kw = fg::killer_word(g, killer_trace ? &trace : nullptr);
      fg::KillerWord ck = fg::cyclically_reduced_killer(g, kw);
      std::ostringstream os;
      if (killer_trace) {
        for (const auto& step : trace) {
          os << "stage " << step.stage << " (vertex v" << step.vertex << "): ";
          if (step.exited)
            os << "word exits; w = " << display(step.word_after) << "\n";
          else
            os << "extended by " << step.extension.str() << "; w = " << display(step.word_after)
               << "\n";
        }
      }
      nlohmann::json out = {{"killer_word", fg::to_json(kw.word)},
                            {"cyclically_reduced", fg::to_json(ck.word)},
                            {"verified", kw.verified && ck.verified}};
      os << out.dump(2);
      emit(os.str(), out_file);
    } else if (*cmd_analyze) {
      fg::Rank m(an_m), n(an_n);
      std::vector<fg::Word> images;
      for (const auto& s : an_images) images.push_back(fg::Word::parse(n, s));
      fg::Homomorphism hom(m, n, images);
      fg::Verdict verdict = fg::classify(hom);
      nlohmann::json out = {{"verdict", fg::to_json(verdict)}};
      std::string csv;
      if (verdict.kind == fg::VerdictKind::finite_index_proper) {
        fg::DistortionWitness w = fg::distortion_witness(hom);
        out["witness"] = fg::to_json(w);
        if (an_growth > 0) {
          std::ostringstream c;
          c << "k,source_lower,image_upper\n";
          for (const auto& row : fg::distortion_growth(w, hom, an_growth))
            c << row.k << "," << row.source_lower << "," << row.image_upper << "\n";
          csv = c.str();
        }
      } else if (verdict.kind == fg::VerdictKind::infinite_index && n.value() >= 2) {
        fg::QsurFailureWitness w = fg::qsur_failure_witness(hom);
        out["witness"] = fg::to_json(w);
        if (an_growth > 0) {
          std::ostringstream c;
          c << "k,distance_lower\n";
          for (const auto& row : fg::qsur_growth(w, hom, an_growth))
            c << row.k << "," << row.distance_lower << "\n";
          csv = c.str();
        }
      }
      std::string text = out.dump(2);
      if (!csv.empty()) text += "\n" + csv;
      emit(text, out_file);
    } else if (*cmd_exp) {
      std::map<std::string, std::string> params;
      params["max-len"] = std::to_string(exp_maxlen);
      params["ball"] = std::to_string(exp_ball);
      params["word"] = exp_word;
      params["kmax"] = std::to_string(exp_kmax);
      params["rank"] = std::to_string(exp_rank);
      if (exp_trace) params["trace"] = "1";
      fg::ExperimentReport rep = fg::run_experiment(exp_id, params);
      std::ostringstream os;
      os << "experiment " << rep.id << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
      for (const auto& line : rep.log) os << "  " << line << "\n";
      if (!rep.csv.empty()) os << rep.csv;
      emit(os.str(), out_file);
      return rep.pass ? 0 : 1;
    }
  } catch (const fg::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
