#include "fg/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fg/errors.hpp"

namespace fg {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

using IntWord = std::vector<int>;  // word over an abstract alphabet, +-(index+1)

IntWord reduce_int(const IntWord& w) {
  IntWord out;
  for (int c : w) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

IntWord invert_int(const IntWord& w) {
  IntWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

IntWord concat_int(const IntWord& a, const IntWord& b) {
  IntWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_int(out);
}

// Canonical key for plateau moves: min of word and its inverse.
IntWord canonical_key(const IntWord& w) {
  IntWord inv = invert_int(w);
  return std::min(w, inv);
}

}  // namespace

StallingsGraph StallingsGraph::build(Rank rank, std::span<const Word> generators) {
  for (const Word& g : generators)
    if (g.rank() != rank) throw std::invalid_argument("StallingsGraph: generator rank mismatch");

  struct MEdge {
    int src, dst, lab;
  };
  std::vector<MEdge> edges;
  int vcount = 1;  // base = 0
  for (const Word& g : generators) {
    if (g.is_identity()) continue;
    int cur = 0;
    for (int i = 0; i < g.length(); ++i) {
      int nxt = (i + 1 == g.length()) ? 0 : vcount++;
      Letter l = g.letter(i);
      if (l.sign() > 0)
        edges.push_back({cur, nxt, l.generator()});
      else
        edges.push_back({nxt, cur, l.generator()});
      cur = nxt;
    }
  }

  // Fold: identify targets of equally labelled edges leaving (or entering)
  // the same vertex, until deterministic.
  Dsu dsu(vcount);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const MEdge& e : edges) {
      int s = dsu.find(e.src), d = dsu.find(e.dst);
      auto [ito, inserted_o] = out_seen.try_emplace({s, e.lab}, d);
      if (!inserted_o && dsu.find(ito->second) != d) {
        dsu.unite(ito->second, d);
        changed = true;
      }
      s = dsu.find(e.src);
      d = dsu.find(e.dst);
      auto [iti, inserted_i] = in_seen.try_emplace({d, e.lab}, s);
      if (!inserted_i && dsu.find(iti->second) != s) {
        dsu.unite(iti->second, s);
        changed = true;
      }
    }
  }

  // Quotient, dedupe parallel copies.
  std::set<std::tuple<int, int, int>> folded;
  for (const MEdge& e : edges) folded.insert({dsu.find(e.src), dsu.find(e.dst), e.lab});
  int base_root = dsu.find(0);

  // Core trim: iteratively drop valence<=1 vertices other than the base.
  std::map<int, int> val;
  for (auto& [s, d, l] : folded) {
    val[s]++;
    val[d]++;
  }
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    for (auto& [v, k] : val) {
      if (v == base_root || k > 1) continue;
      // remove v and its (single) incident edge
      for (auto it = folded.begin(); it != folded.end();) {
        auto [s, d, l] = *it;
        if (s == v || d == v) {
          val[s]--;
          val[d]--;
          it = folded.erase(it);
        } else {
          ++it;
        }
      }
      val.erase(v);
      trimmed = true;
      break;
    }
  }

  // Canonical relabel: breadth-first from the base in the fixed letter order.
  std::map<int, std::vector<std::pair<int, int>>> adj_out, adj_in;  // v -> (lab, other)
  for (auto& [s, d, l] : folded) {
    adj_out[s].push_back({l, d});
    adj_in[d].push_back({l, s});
  }
  std::map<int, int> relabel;
  std::vector<int> order;
  relabel[base_root] = 0;
  order.push_back(base_root);
  StallingsGraph g(rank);
  g.generators_.assign(generators.begin(), generators.end());
  g.parent_.push_back({});
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int lab = 1; lab <= rank.value(); ++lab) {
      for (int dir : {+1, -1}) {
        const auto& vec = dir > 0 ? adj_out[v] : adj_in[v];
        for (auto& [l, other] : vec) {
          if (l != lab) continue;
          if (relabel.count(other)) continue;
          relabel[other] = static_cast<int>(order.size());
          order.push_back(other);
          g.parent_.push_back({relabel[v], lab, dir});
        }
      }
    }
  }

  int V = static_cast<int>(order.size());
  g.out_.assign(static_cast<size_t>(V), std::vector<int>(static_cast<size_t>(rank.value()), -1));
  g.in_.assign(static_cast<size_t>(V), std::vector<int>(static_cast<size_t>(rank.value()), -1));
  for (auto& [s, d, l] : folded) {
    int ns = relabel.at(s), nd = relabel.at(d);
    if (g.out_[static_cast<size_t>(ns)][static_cast<size_t>(l - 1)] != -1 ||
        g.in_[static_cast<size_t>(nd)][static_cast<size_t>(l - 1)] != -1)
      throw std::logic_error("StallingsGraph: folding left a nondeterministic slot");
    g.out_[static_cast<size_t>(ns)][static_cast<size_t>(l - 1)] = nd;
    g.in_[static_cast<size_t>(nd)][static_cast<size_t>(l - 1)] = ns;
  }

  g.build_witness_tables();
  return g;
}

void StallingsGraph::build_witness_tables() {
  int V = vertex_count();
  int n = rank_.value();

  tree_path_.assign(static_cast<size_t>(V), Word::identity(rank_));
  for (int v = 1; v < V; ++v) {
    const ParentLink& p = parent_[static_cast<size_t>(v)];
    Word step_letter = Word::reduce(
        rank_, std::vector<Letter>{Letter(p.lab, p.dir > 0 ? 1 : -1)});
    tree_path_[static_cast<size_t>(v)] = tree_path_[static_cast<size_t>(p.parent)] * step_letter;
  }

  basis_of_out_.assign(static_cast<size_t>(V), std::vector<int>(static_cast<size_t>(n), -1));
  basis_words_.clear();
  for (int v = 0; v < V; ++v) {
    for (int lab = 1; lab <= n; ++lab) {
      int w = out_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)];
      if (w < 0) continue;
      bool tree = (parent_[static_cast<size_t>(w)].parent == v &&
                   parent_[static_cast<size_t>(w)].lab == lab &&
                   parent_[static_cast<size_t>(w)].dir > 0) ||
                  (parent_[static_cast<size_t>(v)].parent == w &&
                   parent_[static_cast<size_t>(v)].lab == lab &&
                   parent_[static_cast<size_t>(v)].dir < 0);
      if (tree) continue;
      basis_of_out_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)] =
          static_cast<int>(basis_words_.size());
      Word mid = Word::reduce(rank_, std::vector<Letter>{Letter(lab, 1)});
      basis_words_.push_back(tree_path_[static_cast<size_t>(v)] * mid *
                             tree_path_[static_cast<size_t>(w)].inverse());
    }
  }

  // Express basis elements over the defining generators: rewrite each
  // generator over the basis, then invert the resulting surjection
  // F(generators) ->> F(basis) by recorded Nielsen moves.
  const int B = static_cast<int>(basis_words_.size());
  basis_over_generators_.assign(static_cast<size_t>(B), {});
  if (B == 0) return;

  auto rewrite_over_basis = [&](const Word& g) -> std::optional<IntWord> {
    IntWord emitted;
    int cur = 0;
    for (Letter l : g.letters()) {
      if (l.sign() > 0) {
        int nxt = out_[static_cast<size_t>(cur)][static_cast<size_t>(l.generator() - 1)];
        if (nxt < 0) return std::nullopt;
        int b = basis_of_out_[static_cast<size_t>(cur)][static_cast<size_t>(l.generator() - 1)];
        if (b >= 0) emitted.push_back(b + 1);
        cur = nxt;
      } else {
        int nxt = in_[static_cast<size_t>(cur)][static_cast<size_t>(l.generator() - 1)];
        if (nxt < 0) return std::nullopt;
        int b = basis_of_out_[static_cast<size_t>(nxt)][static_cast<size_t>(l.generator() - 1)];
        if (b >= 0) emitted.push_back(-(b + 1));
        cur = nxt;
      }
    }
    if (cur != 0) return std::nullopt;
    return reduce_int(emitted);
  };

  struct Entry {
    IntWord over_basis;
    IntWord over_gens;  // +-(generator index + 1)
  };
  std::vector<Entry> entries;
  for (size_t j = 0; j < generators_.size(); ++j) {
    if (generators_[j].is_identity()) continue;
    auto w = rewrite_over_basis(generators_[j]);
    if (!w) throw std::logic_error("StallingsGraph: defining generator does not read as a loop");
    entries.push_back({*w, IntWord{static_cast<int>(j) + 1}});
  }

  // Nielsen reduction with recorded expressions. Strict length drops first;
  // on plateaus allow length-preserving moves that shrink the canonical key.
  auto apply_moves = [&]() {
    for (;;) {
      // drop trivial entries
      entries.erase(std::remove_if(entries.begin(), entries.end(),
                                   [](const Entry& e) { return e.over_basis.empty(); }),
                    entries.end());
      bool acted = false;
      for (size_t i = 0; i < entries.size() && !acted; ++i) {
        for (size_t j = 0; j < entries.size() && !acted; ++j) {
          if (i == j) continue;
          for (int s : {+1, -1}) {
            IntWord wj = s > 0 ? entries[j].over_basis : invert_int(entries[j].over_basis);
            IntWord ej = s > 0 ? entries[j].over_gens : invert_int(entries[j].over_gens);
            for (bool left : {false, true}) {
              IntWord cand = left ? concat_int(wj, entries[i].over_basis)
                                  : concat_int(entries[i].over_basis, wj);
              if (cand.size() < entries[i].over_basis.size() ||
                  (cand.size() == entries[i].over_basis.size() &&
                   canonical_key(cand) < canonical_key(entries[i].over_basis))) {
                entries[i].over_basis = cand;
                entries[i].over_gens = left ? concat_int(ej, entries[i].over_gens)
                                            : concat_int(entries[i].over_gens, ej);
                acted = true;
                break;
              }
            }
            if (acted) break;
          }
        }
      }
      if (!acted) break;
    }
  };
  apply_moves();

  std::vector<bool> have(static_cast<size_t>(B), false);
  for (const Entry& e : entries) {
    if (e.over_basis.size() != 1) continue;
    int c = e.over_basis[0];
    int b = (c > 0 ? c : -c) - 1;
    if (have[static_cast<size_t>(b)]) continue;
    have[static_cast<size_t>(b)] = true;
    IntWord expr = c > 0 ? e.over_gens : invert_int(e.over_gens);
    for (int f : expr)
      basis_over_generators_[static_cast<size_t>(b)].push_back(
          {(f > 0 ? f : -f) - 1, f > 0 ? 1 : -1});
  }

  if (std::find(have.begin(), have.end(), false) != have.end()) {
    // Fallback: breadth-first search over products of the defining
    // generators, keyed on the rewritten value over the basis.
    std::map<IntWord, IntWord> visited;  // value over basis -> expression over gens
    std::queue<IntWord> queue;
    visited[{}] = {};
    queue.push({});
    size_t nodes = 0;
    const size_t node_cap = 200000;
    std::vector<std::pair<IntWord, IntWord>> gen_values;  // (value over basis, z-letter)
    for (const Entry& e : entries) gen_values.push_back({e.over_basis, e.over_gens});
    for (size_t j = 0; j < generators_.size(); ++j) {
      if (generators_[j].is_identity()) continue;
      auto w = rewrite_over_basis(generators_[j]);
      gen_values.push_back({*w, IntWord{static_cast<int>(j) + 1}});
    }
    while (!queue.empty() && nodes < node_cap &&
           std::find(have.begin(), have.end(), false) != have.end()) {
      IntWord value = queue.front();
      queue.pop();
      const IntWord& expr = visited.at(value);
      for (auto& [gv, gz] : gen_values) {
        for (int s : {+1, -1}) {
          IntWord nv = concat_int(value, s > 0 ? gv : invert_int(gv));
          if (visited.count(nv)) continue;
          IntWord ne = concat_int(expr, s > 0 ? gz : invert_int(gz));
          visited[nv] = ne;
          queue.push(nv);
          ++nodes;
          if (nv.size() == 1) {
            int b = (nv[0] > 0 ? nv[0] : -nv[0]) - 1;
            if (!have[static_cast<size_t>(b)]) {
              have[static_cast<size_t>(b)] = true;
              IntWord e2 = nv[0] > 0 ? ne : invert_int(ne);
              for (int f : e2)
                basis_over_generators_[static_cast<size_t>(b)].push_back(
                    {(f > 0 ? f : -f) - 1, f > 0 ? 1 : -1});
            }
          }
        }
      }
    }
    if (std::find(have.begin(), have.end(), false) != have.end()) {
      witness_status_ = "basis expression over defining generators not found within budget";
      return;
    }
  }

  // Sanity: each basis expression must evaluate back to the basis element.
  for (int b = 0; b < B; ++b) {
    Word prod = Word::identity(rank_);
    for (auto& [j, s] : basis_over_generators_[static_cast<size_t>(b)]) {
      const Word& y = generators_[static_cast<size_t>(j)];
      prod = prod * (s > 0 ? y : y.inverse());
    }
    if (prod != basis_words_[static_cast<size_t>(b)])
      throw std::logic_error("StallingsGraph: basis expression verification failed");
  }
}

int StallingsGraph::edge_count() const {
  int c = 0;
  for (const auto& row : out_)
    for (int t : row)
      if (t >= 0) ++c;
  return c;
}

std::optional<int> StallingsGraph::step(int v, Letter l) const {
  const auto& table = l.sign() > 0 ? out_ : in_;
  int t = table[static_cast<size_t>(v)][static_cast<size_t>(l.generator() - 1)];
  if (t < 0) return std::nullopt;
  return t;
}

StallingsGraph::ReadResult StallingsGraph::read(int v, const Word& w) const {
  int cur = v;
  for (int i = 0; i < w.length(); ++i) {
    auto nxt = step(cur, w.letter(i));
    if (!nxt) return ReadResult{false, cur, i};
    cur = *nxt;
  }
  return ReadResult{true, cur, w.length()};
}

int StallingsGraph::valence(int v) const {
  int c = 0;
  for (int lab = 0; lab < rank_.value(); ++lab) {
    if (out_[static_cast<size_t>(v)][static_cast<size_t>(lab)] >= 0) ++c;
    if (in_[static_cast<size_t>(v)][static_cast<size_t>(lab)] >= 0) ++c;
  }
  return c;
}

int StallingsGraph::min_valence() const {
  int m = 2 * rank_.value();
  for (int v = 0; v < vertex_count(); ++v) m = std::min(m, valence(v));
  return m;
}

std::vector<VertexClass> StallingsGraph::bad_vertices() const {
  std::vector<VertexClass> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!is_bad(v)) continue;
    VertexClass vc{v, valence(v), true, {}};
    for (int lab = 1; lab <= rank_.value(); ++lab) {
      if (out_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)] < 0)
        vc.missing_slots.push_back(Letter(lab, 1));
      if (in_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)] < 0)
        vc.missing_slots.push_back(Letter(lab, -1));
    }
    std::sort(vc.missing_slots.begin(), vc.missing_slots.end(),
              [](Letter a, Letter b) { return a.order_key() < b.order_key(); });
    out.push_back(std::move(vc));
  }
  return out;
}

std::optional<int> StallingsGraph::index() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (is_bad(v)) return std::nullopt;
  return vertex_count();
}

CosetData StallingsGraph::coset_data() const {
  if (!index()) throw std::domain_error("coset_data: subgroup has infinite index");
  CosetData cd;
  cd.cosets = vertex_count();
  for (int lab = 1; lab <= rank_.value(); ++lab) {
    std::vector<int> perm(static_cast<size_t>(cd.cosets));
    for (int v = 0; v < cd.cosets; ++v)
      perm[static_cast<size_t>(v)] = out_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)];
    cd.generator_permutations.push_back(std::move(perm));
  }
  for (const auto& perm : cd.generator_permutations) {
    // order = lcm of cycle lengths
    std::vector<bool> seen(perm.size(), false);
    long order = 1;
    for (size_t v = 0; v < perm.size(); ++v) {
      if (seen[v]) continue;
      long len = 0;
      size_t c = v;
      while (!seen[c]) {
        seen[c] = true;
        c = static_cast<size_t>(perm[c]);
        ++len;
      }
      order = std::lcm(order, len);
    }
    cd.exponents.push_back(order);
  }
  return cd;
}

std::vector<Word> StallingsGraph::enumerate_elements(int max_len) const {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int v, int32_t last_code, int depth) -> void {
    if (v == 0) out.push_back(Word::reduce(rank_, cur));
    if (depth == max_len) return;
    for (int lab = 1; lab <= rank_.value(); ++lab) {
      for (int s : {1, -1}) {
        Letter l(lab, s);
        if (last_code != 0 && l.code() == -last_code) continue;
        auto nxt = step(v, l);
        if (!nxt) continue;
        cur.push_back(l);
        self(self, *nxt, l.code(), depth + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](const Word& a, const Word& b) { return a == b; }),
            out.end());
  return out;
}

std::optional<MembershipWitness> StallingsGraph::membership(const Word& g) const {
  if (g.rank() != rank_) throw std::invalid_argument("membership: rank mismatch");
  IntWord emitted;
  int cur = 0;
  for (Letter l : g.letters()) {
    auto nxt = step(cur, l);
    if (!nxt) return std::nullopt;
    if (l.sign() > 0) {
      int b = basis_of_out_[static_cast<size_t>(cur)][static_cast<size_t>(l.generator() - 1)];
      if (b >= 0) emitted.push_back(b + 1);
    } else {
      int b = basis_of_out_[static_cast<size_t>(*nxt)][static_cast<size_t>(l.generator() - 1)];
      if (b >= 0) emitted.push_back(-(b + 1));
    }
    cur = *nxt;
  }
  if (cur != 0) return std::nullopt;

  emitted = reduce_int(emitted);
  if (!emitted.empty() && !witness_status_.empty()) throw BudgetExhausted(witness_status_);

  IntWord expr;
  for (int c : emitted) {
    int b = (c > 0 ? c : -c) - 1;
    IntWord piece;
    for (auto& [j, s] : basis_over_generators_[static_cast<size_t>(b)]) piece.push_back(s * (j + 1));
    if (c < 0) piece = invert_int(piece);
    expr = concat_int(expr, piece);
  }
  MembershipWitness w;
  for (int f : expr) w.factors.push_back({(f > 0 ? f : -f) - 1, f > 0 ? 1 : -1});
  if (evaluate_witness(rank_, generators_, w) != g)
    throw std::logic_error("membership: witness failed to multiply back to g");
  return w;
}

std::string StallingsGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph stallings {\n  rankdir=LR;\n";
  os << "  v0 [shape=doublecircle];\n";
  for (int v = 0; v < vertex_count(); ++v)
    if (is_bad(v)) os << "  v" << v << " [color=red, fontcolor=red];\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (int lab = 1; lab <= rank_.value(); ++lab) {
      int t = out_[static_cast<size_t>(v)][static_cast<size_t>(lab - 1)];
      if (t >= 0)
        os << "  v" << v << " -> v" << t << " [label=\"" << Letter(lab, 1).to_char() << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Word evaluate_witness(Rank rank, std::span<const Word> generators, const MembershipWitness& w) {
  Word prod = Word::identity(rank);
  for (auto& [j, s] : w.factors) {
    if (j < 0 || static_cast<size_t>(j) >= generators.size())
      throw std::invalid_argument("evaluate_witness: generator index out of range");
    prod = prod * (s > 0 ? generators[static_cast<size_t>(j)] : generators[static_cast<size_t>(j)].inverse());
  }
  return prod;
}

}  // namespace fg
