#include "amalgam/kernel.hpp"

#include <algorithm>
#include <random>

#include "amalgam/enumerate.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "LESS";
    case Relation::Equiv: return "EQUIV";
    case Relation::Greater: return "GREATER";
    case Relation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

Relation reversed(Relation r) {
  if (r == Relation::Less) return Relation::Greater;
  if (r == Relation::Greater) return Relation::Less;
  return r;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Precondition: return "PRECONDITION";
  }
  return "?";
}

void sort_by_size_then_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
  });
}

// --- Ambient -----------------------------------------------------------

Ambient::Ambient(const ClassSpec& spec, Graph m, bool use_fast)
    : spec_(&spec), m_(std::move(m)), use_fast_(use_fast && spec.has_fast()) {}

bool Ambient::strong(VertexSet a, VertexSet b) {
  if (!a.subset_of(b)) throw InvalidArgument("strong(a,b) needs a ⊆ b");
  auto& row = cache_[b.bits()];
  if (auto it = row.find(a.bits()); it != row.end()) return it->second;
  const VertexSet local = restrict_to(a, b);
  const bool whole = b == m_.all();
  bool r;
  if (whole) {
    r = use_fast_ ? spec_->fast_strong(a, m_) : spec_->strong(a, m_);
  } else {
    Graph sub = induced(m_, b);
    r = use_fast_ ? spec_->fast_strong(local, sub) : spec_->strong(local, sub);
  }
  // The row reference may have been invalidated by nested inserts.
  cache_[b.bits()][a.bits()] = r;
  return r;
}

bool Ambient::is_minimal_pair(VertexSet x, VertexSet y) {
  if (!x.proper_subset_of(y)) return false;
  auto& row = minimal_cache_[y.bits()];
  if (auto it = row.find(x.bits()); it != row.end()) return it->second;
  bool r = !strong(x, y);
  // A4 reduces "strong in every proper intermediate" to the maximal ones;
  // verify_minimal_pair re-checks all of them independently.
  for (int v : y - x) {
    if (!r) break;
    r = strong(x, y.without(v));
  }
  minimal_cache_[y.bits()][x.bits()] = r;
  return r;
}

bool Ambient::is_biminimal_pair(VertexSet x, VertexSet y) {
  if (!is_minimal_pair(x, y)) return false;
  const VertexSet outside = y - x;
  return all_subsets(x, [&](VertexSet x0) {
    return all_subsets(outside, [&](VertexSet y0) {
      if (y0.empty()) return true;
      if (x0 == x && y0 == outside) return true;
      return !is_minimal_pair(x0, x0 | y0);
    });
  });
}

template <typename Pred>
std::vector<VertexSet> Ambient::extensions(VertexSet x, int max_new, VertexSet within, Pred&& keep) {
  std::vector<VertexSet> out;
  for_each_subset_upto(within - x, max_new, [&](VertexSet s) {
    if (s.empty()) return;
    if (keep(x | s)) out.push_back(x | s);
  });
  sort_by_size_then_lex(out);
  return out;
}

std::vector<VertexSet> Ambient::minimal_extensions(VertexSet x, int max_new) {
  return minimal_extensions(x, max_new, m_.all());
}

std::vector<VertexSet> Ambient::minimal_extensions(VertexSet x, int max_new, VertexSet within) {
  return extensions(x, max_new, within, [&](VertexSet y) { return is_minimal_pair(x, y); });
}

std::vector<VertexSet> Ambient::biminimal_extensions(VertexSet x, int max_new) {
  return biminimal_extensions(x, max_new, m_.all());
}

std::vector<VertexSet> Ambient::biminimal_extensions(VertexSet x, int max_new, VertexSet within) {
  return extensions(x, max_new, within, [&](VertexSet y) { return is_biminimal_pair(x, y); });
}

Relation Ambient::compare(VertexSet x, VertexSet y1, VertexSet y2) const {
  if (!spec_->has_comparator()) throw MissingComparator("class " + spec_->name + " has no biminimal comparator");
  return spec_->bimin_compare(ExtRef{&m_, x, y1}, ExtRef{&m_, x, y2});
}

// --- strength oracles ----------------------------------------------------

bool is_strong_bruteforce(const ClassSpec& spec, VertexSet a, const Graph& m) {
  if (!a.subset_of(m.all())) throw InvalidArgument("set outside ambient");
  const VertexSet rest = m.all() - a;
  if (rest.size() > subset_budget())
    throw BudgetExceeded("is_strong_bruteforce: " + std::to_string(rest.size()) + " free vertices exceed budget " +
                         std::to_string(subset_budget()));
  return all_subsets(rest, [&](VertexSet extra) {
    const VertexSet x = a | extra;
    return spec.strong(restrict_to(a, x), induced(m, x));
  });
}

bool exists_strong(const ClassSpec& pairs, const Comparator& cmp, VertexSet a, const Graph& m,
                   std::optional<int> max_base, std::optional<int> max_new) {
  if (!cmp) throw MissingComparator("no comparator for class " + pairs.name);
  Ambient amb(pairs, m);
  const int new_bound = max_new.value_or(-1);
  bool ok = true;
  for_each_subset_upto(a, max_base.value_or(-1), [&](VertexSet x) {
    if (!ok || x.empty()) return;
    auto exts = amb.biminimal_extensions(x, new_bound);
    if (exts.empty()) return;
    std::vector<VertexSet> inside;
    for (VertexSet y : exts)
      if (y.subset_of(a)) inside.push_back(y);
    for (VertexSet y : exts) {
      if (y.subset_of(a)) continue;
      bool answered = std::any_of(inside.begin(), inside.end(), [&](VertexSet y2) {
        Relation r = cmp(ExtRef{&m, x, y2}, ExtRef{&m, x, y});
        return r == Relation::Less || r == Relation::Equiv;
      });
      if (!answered) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_strong_by_biminimal(const ClassSpec& spec, VertexSet a, const Graph& m, int max_new) {
  return exists_strong(spec, spec.bimin_compare, a, m, spec.max_base, max_new);
}

// --- axioms ----------------------------------------------------------------

bool AxiomReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.pass; });
}

const AxiomVerdict& AxiomReport::get(const std::string& axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return v;
  throw InvalidArgument("no verdict for " + axiom);
}

std::vector<Graph> members_up_to_iso(const ClassSpec& spec, int n) {
  std::vector<Graph> out;
  if (spec.requires_order) {
    for (auto& g : ordered_graphs(n))
      if (spec.membership(g)) out.push_back(std::move(g));
  } else {
    for (const auto& g : graphs_up_to_iso(n))
      if (spec.membership(g)) out.push_back(g);
  }
  return out;
}

namespace {

struct AxiomState {
  AxiomVerdict closure{"closure", true, {}};
  AxiomVerdict a1{"A1", true, {}};
  AxiomVerdict a2{"A2", true, {}};
  AxiomVerdict a3{"A3", true, {}};
  AxiomVerdict a4{"A4", true, {}};
  AxiomVerdict a5{"A5", true, {}};
  AxiomVerdict a6{"A6", true, {}};

  static void fail(AxiomVerdict& v, const Graph& w, VertexSet a, VertexSet b, VertexSet x, std::string note) {
    if (!v.pass) return;
    v.pass = false;
    v.witness = AxiomWitness{w, a, b, x, std::move(note)};
  }
};

// Checks every axiom on the single ambient c, exhaustively over its subsets.
void check_all_in(const ClassSpec& spec, const Graph& c, AxiomState& st) {
  const VertexSet all = c.all();
  for (int v : all)
    if (!spec.membership(induced(c, all.without(v))))
      AxiomState::fail(st.closure, c, all.without(v), all, {}, "induced substructure left the class");
  Ambient amb(spec, c);
  if (!amb.strong(all, all)) AxiomState::fail(st.a1, c, all, all, {}, "M <= M fails");
  if (!amb.strong({}, all)) AxiomState::fail(st.a5, c, {}, all, {}, "empty set not strong");
  for_each_subset(all, [&](VertexSet b) {
    for_each_subset(b, [&](VertexSet a) {
      const bool ab = amb.strong(a, b);
      const bool ac = amb.strong(a, all);
      const bool bc = amb.strong(b, all);
      if (st.a3.pass && ab && bc && !ac) AxiomState::fail(st.a3, c, a, b, all, "A <= B <= C but A not <= C");
      if (st.a4.pass && ac && !ab) AxiomState::fail(st.a4, c, a, b, all, "A <= C, A ⊆ B ⊆ C, A not <= B");
    });
  });
  if (!st.a6.pass) return;
  for_each_subset(all, [&](VertexSet a) {
    if (!st.a6.pass || !amb.strong(a, all)) return;
    for_each_subset(all, [&](VertexSet x) {
      if (st.a6.pass && !amb.strong(a & x, x))
        AxiomState::fail(st.a6, c, a, all, x, "A <= B but A∩X not <= B∩X");
    });
  });
}

Graph random_member_candidate(const ClassSpec& spec, int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.45);
  if (spec.requires_order) {
    Graph g = Graph::ordered(n);
    for (int i = 0; i + 1 < n; ++i)
      if (coin(rng)) g.add_edge(i, i + 1);
    return g;
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

AxiomReport check_axioms(const ClassSpec& spec, int max_n, std::uint64_t seed) {
  if (max_n < 0 || max_n > 10) throw BudgetExceeded("check_axioms limited to 10 vertices");
  AxiomReport report;
  report.class_name = spec.name;
  report.max_n = max_n;
  report.seed = seed;
  AxiomState st;
  if (!spec.membership(spec.empty_graph()))
    AxiomState::fail(st.a5, spec.empty_graph(), {}, {}, {}, "empty structure not in class");
  const int exhaustive_to = std::min(max_n, 6);
  for (int n = 0; n <= exhaustive_to; ++n)
    for (const auto& c : members_up_to_iso(spec, n)) check_all_in(spec, c, st);
  if (max_n > exhaustive_to) {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (int n = exhaustive_to + 1; n <= max_n; ++n) {
      for (int sample = 0; sample < 60; ++sample) {
        Graph c = random_member_candidate(spec, n, rng);
        if (spec.membership(c)) check_all_in(spec, c, st);
      }
    }
  }
  report.verdicts = {st.closure, st.a1, st.a2, st.a3, st.a4, st.a5, st.a6};
  return report;
}

// --- minimal pairs -----------------------------------------------------------

namespace {

std::vector<MinimalPair> enumerate_pairs(const ClassSpec& spec, const Graph& x, int max_new, PairKind kind) {
  if (max_new < 0) throw InvalidArgument("negative extension size");
  if (x.size() + max_new > 8) throw BudgetExceeded("extension enumeration limited to 8 vertices in y");
  if (spec.requires_order != x.has_order()) throw InvalidArgument("base order does not match the class");
  std::vector<MinimalPair> out;
  const VertexSet base = x.all();
  for (int j = 1; j <= max_new; ++j) {
    for (auto& y : extensions_up_to_iso(x, j)) {
      if (!spec.membership(y)) continue;
      Ambient amb(spec, y);
      bool ok = kind == PairKind::Biminimal ? amb.is_biminimal_pair(base, y.all()) : amb.is_minimal_pair(base, y.all());
      if (ok) out.push_back(MinimalPair{x, std::move(y), base, kind});
    }
  }
  return out;
}

bool minimal_by_definition(const ClassSpec& spec, const Graph& y, VertexSet x) {
  if (!x.proper_subset_of(y.all())) return false;
  if (spec.strong(x, y)) return false;
  return all_subsets(y.all() - x, [&](VertexSet extra) {
    const VertexSet y0 = x | extra;
    if (y0 == y.all()) return true;
    return spec.strong(restrict_to(x, y0), induced(y, y0));
  });
}

}  // namespace

std::vector<MinimalPair> enumerate_biminimal_extensions(const ClassSpec& spec, const Graph& x, int max_new) {
  return enumerate_pairs(spec, x, max_new, PairKind::Biminimal);
}

std::vector<MinimalPair> enumerate_minimal_extensions(const ClassSpec& spec, const Graph& x, int max_new) {
  return enumerate_pairs(spec, x, max_new, PairKind::Minimal);
}

bool verify_minimal_pair(const ClassSpec& spec, const MinimalPair& pair) {
  const Graph& y = pair.y;
  const VertexSet x = pair.base;
  if (!x.subset_of(y.all()) || !(induced(y, x) == pair.x)) return false;
  if ((y.all() - x).size() > 10) throw BudgetExceeded("verify_minimal_pair limited to 10 new vertices");
  if (!spec.membership(y)) return false;
  if (!minimal_by_definition(spec, y, x)) return false;
  if (pair.kind == PairKind::Minimal) return true;
  const VertexSet outside = y.all() - x;
  return all_subsets(x, [&](VertexSet x0) {
    return all_subsets(outside, [&](VertexSet y0) {
      if (y0.empty() || (x0 == x && y0 == outside)) return true;
      const VertexSet s = x0 | y0;
      return !minimal_by_definition(spec, induced(y, s), restrict_to(x0, s));
    });
  });
}

// --- amalgams ----------------------------------------------------------

namespace {

using Block = std::vector<int>;

// Maximal runs of consecutive, edge-joined vertices.
std::vector<Block> blocks_of(const Graph& d, const std::vector<int>& seg) {
  std::vector<Block> out;
  for (int v : seg) {
    if (out.empty() || !d.adjacent(out.back().back(), v)) out.emplace_back();
    out.back().push_back(v);
  }
  return out;
}

// Orders one gap between shared vertices `left` and `right` (-1 at the
// ends). b's part goes first unless a block of c's part is edge-attached to
// `left`, or one of b's is attached to `right`; attached blocks go to the
// gap's ends. When both sides attach at the same end no order can keep
// every edge between successors, and the default is returned.
std::vector<int> merge_gap(const Graph& d, int left, int right, const std::vector<int>& sb,
                           const std::vector<int>& sc) {
  auto bb = blocks_of(d, sb);
  auto bc = blocks_of(d, sc);
  auto attached = [&](const std::vector<Block>& bl, bool at_left) {
    if (bl.empty()) return false;
    const int end = at_left ? left : right;
    return end >= 0 && d.adjacent(end, at_left ? bl.front().front() : bl.back().back());
  };
  std::vector<int> plain(sb);
  plain.insert(plain.end(), sc.begin(), sc.end());
  const bool bl = attached(bb, true), cl = attached(bc, true);
  const bool br = attached(bb, false), cr = attached(bc, false);
  if ((bl && cl) || (br && cr)) return plain;

  std::vector<Block> first, last;
  if (cl) first.push_back(bc.front()), bc.erase(bc.begin());
  if (bl) first.push_back(bb.front()), bb.erase(bb.begin());
  if (br && !bb.empty()) last.push_back(bb.back()), bb.pop_back();
  if (cr && !bc.empty()) last.push_back(bc.back()), bc.pop_back();
  std::vector<int> out;
  for (auto* part : {&first, &bb, &bc, &last})
    for (const auto& block : *part) out.insert(out.end(), block.begin(), block.end());
  return out;
}

}  // namespace

Graph amalgamate(const Graph& b, const Graph& c, const PartialMap& c_to_b) {
  if (static_cast<int>(c_to_b.size()) != c.size()) throw AmalgamationError("map size differs from c");
  if (b.has_order() != c.has_order()) throw AmalgamationError("cannot amalgamate ordered with unordered");
  const int nb = b.size();
  std::vector<int> image(c.size());
  VertexSet used;
  int next = nb;
  for (int i = 0; i < c.size(); ++i) {
    int t = c_to_b[i];
    if (t >= 0) {
      if (t >= nb || used.contains(t)) throw AmalgamationError("identification is not injective");
      used = used.with(t);
      image[i] = t;
    } else {
      image[i] = next++;
    }
  }
  if (next > kMaxVertices) throw BudgetExceeded("amalgam exceeds 64 vertices");
  for (int i = 0; i < c.size(); ++i) {
    if (c_to_b[i] < 0) continue;
    for (int j = i + 1; j < c.size(); ++j) {
      if (c_to_b[j] < 0) continue;
      if (c.adjacent(i, j) != b.adjacent(image[i], image[j]))
        throw AmalgamationError("b and c disagree on an edge over the base");
      if (c.has_order() && ((c.rank(i) < c.rank(j)) != (b.rank(image[i]) < b.rank(image[j]))))
        throw AmalgamationError("b and c disagree on the order over the base");
    }
  }
  Graph d(next);
  for (auto [u, v] : b.edges()) d.add_edge(u, v);
  for (auto [u, v] : c.edges()) d.add_edge(image[u], image[v]);
  if (!b.has_order()) return d;

  // Walk both orders gap by gap between consecutive shared vertices.
  std::vector<int> seq;
  const auto& ob = b.order();
  const auto& oc = c.order();
  std::size_t ib = 0, ic = 0;
  int left = -1;
  while (ib <= ob.size()) {
    std::vector<int> sb, sc;
    while (ib < ob.size() && !used.contains(ob[ib])) sb.push_back(ob[ib++]);
    while (ic < oc.size() && c_to_b[oc[ic]] < 0) sc.push_back(image[oc[ic++]]);
    const int right = ib < ob.size() ? ob[ib] : -1;
    auto merged = merge_gap(d, left, right, sb, sc);
    seq.insert(seq.end(), merged.begin(), merged.end());
    if (right < 0) break;
    seq.push_back(right);
    left = right;
    ++ib;
    ++ic;
  }
  d.set_order(seq);
  return d;
}

Graph free_amalgam(VertexSet a, const Graph& b, const Graph& c) {
  if (!a.subset_of(b.all()) || !a.subset_of(c.all())) throw AmalgamationError("base not contained in both sides");
  PartialMap map(c.size(), -1);
  for (int v : a) map[v] = v;
  return amalgamate(b, c, map);
}

namespace {

AmalgamVerdict amalgam_common(const ClassSpec& spec, VertexSet a, const Graph& b, const Graph& c, bool need_c_strong) {
  AmalgamVerdict v;
  v.outcome = Outcome::Precondition;
  if (!spec.membership(b) || !spec.membership(c)) {
    v.detail = "b or c is not in the class";
    return v;
  }
  if (!a.subset_of(b.all()) || !a.subset_of(c.all())) {
    v.detail = "base not contained in both sides";
    return v;
  }
  if (!spec.effective_strong(a, b)) {
    v.detail = "base is not strong in b";
    return v;
  }
  if (need_c_strong && !spec.effective_strong(a, c)) {
    v.detail = "base is not strong in c";
    return v;
  }
  try {
    v.d = free_amalgam(a, b, c);
  } catch (const AmalgamationError& e) {
    v.detail = e.what();
    return v;
  }
  v.b_in_d = b.all();
  v.c_in_d = a;
  for (int i = b.size(); i < v.d.size(); ++i) v.c_in_d = v.c_in_d.with(i);
  v.in_class = spec.membership(v.d);
  if (v.in_class) {
    v.b_strong = spec.effective_strong(v.b_in_d, v.d);
    v.c_strong = spec.effective_strong(v.c_in_d, v.d);
  }
  v.outcome = Outcome::Fail;
  return v;
}

}  // namespace

AmalgamVerdict check_free_amalgamation(const ClassSpec& spec, VertexSet a, const Graph& b, const Graph& c) {
  AmalgamVerdict v = amalgam_common(spec, a, b, c, true);
  if (v.outcome == Outcome::Precondition) return v;
  v.outcome = v.in_class && v.b_strong && v.c_strong ? Outcome::Pass : Outcome::Fail;
  if (v.outcome == Outcome::Fail)
    v.detail = !v.in_class ? "amalgam not in class" : (!v.b_strong ? "b not strong in amalgam" : "c not strong in amalgam");
  return v;
}

AmalgamVerdict check_full_amalgamation(const ClassSpec& spec, VertexSet a, const Graph& b, const Graph& c) {
  AmalgamVerdict v = amalgam_common(spec, a, b, c, false);
  if (v.outcome == Outcome::Precondition) return v;
  v.outcome = v.in_class && v.c_strong ? Outcome::Pass : Outcome::Fail;
  if (v.outcome == Outcome::Fail) v.detail = !v.in_class ? "amalgam not in class" : "c not strong in amalgam";
  return v;
}

}  // namespace amalgam
