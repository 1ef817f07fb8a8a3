#include "amalgam/closure.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "amalgam/errors.hpp"
#include "amalgam/kernel.hpp"

namespace amalgam {

const char* to_string(ClosureMode m) { return m == ClosureMode::Mcl ? "mcl" : "resolve"; }

ChiStrategy ChiStrategy::lexicographic() {
  return {"lex", [](std::span<const VertexSet> c) {
            return *std::min_element(c.begin(), c.end(), [](VertexSet a, VertexSet b) { return a.lex_less(b); });
          }};
}

ChiStrategy ChiStrategy::reverse_lexicographic() {
  return {"revlex", [](std::span<const VertexSet> c) {
            return *std::max_element(c.begin(), c.end(), [](VertexSet a, VertexSet b) { return a.lex_less(b); });
          }};
}

namespace {

int new_bound(const ClassSpec& spec, const ClosureOptions& opt) {
  return opt.max_new >= 0 ? opt.max_new : spec.max_new.value_or(-1);
}

int base_bound(const ClassSpec& spec) { return spec.max_base.value_or(-1); }

// Shared fixpoint loop: `grow(base)` returns the vertices a base contributes.
template <typename Grow>
ClosureReport fixpoint(int max_base, VertexSet a, Ambient& amb, ClosureMode mode, const ClosureOptions& opt,
                       Grow&& grow) {
  if (!a.subset_of(amb.graph().all())) throw InvalidArgument("set outside ambient");
  ClosureReport rep;
  rep.input = a;
  rep.mode = mode;
  std::unordered_set<std::uint64_t> done;
  VertexSet cur = a;
  while (true) {
    VertexSet next = cur;
    if (max_base < 0 && cur.size() > subset_budget()) throw BudgetExceeded("closure layer too large for unbounded bases");
    for_each_subset_upto(cur, max_base, [&](VertexSet base) {
      if (base.empty() || !done.insert(base.bits()).second) return;
      next |= grow(base);
    });
    const bool changed = next != cur;
    if (changed || rep.layers.empty()) rep.layers.push_back(next);
    cur = next;
    if (!changed) break;
  }
  rep.result = cur;
  rep.verified_strong = amb.strong_in_m(cur);
  rep.touches_boundary = cur.intersects(opt.boundary);
  return rep;
}

// ≼-minimal members of exts.
std::vector<VertexSet> minimal_among(Ambient& amb, VertexSet x, const std::vector<VertexSet>& exts) {
  std::vector<VertexSet> out;
  for (VertexSet y : exts) {
    bool dominated = std::any_of(exts.begin(), exts.end(),
                                 [&](VertexSet z) { return z != y && amb.compare(x, z, y) == Relation::Less; });
    if (!dominated) out.push_back(y);
  }
  return out;
}

}  // namespace

ClosureReport mcl(const ClassSpec& spec, VertexSet a, const Graph& m, const ClosureOptions& opt) {
  Ambient amb(spec, m);
  const int bound = new_bound(spec, opt);
  return fixpoint(opt.mcl_max_base.value_or(base_bound(spec)), a, amb, ClosureMode::Mcl, opt, [&](VertexSet base) {
    VertexSet add;
    for (VertexSet y : amb.minimal_extensions(base, bound)) add |= y;
    return add;
  });
}

ClosureReport resolve(const ClassSpec& spec, VertexSet a, const Graph& m, const ChiStrategy& chi,
                      const ClosureOptions& opt) {
  if (!spec.has_comparator()) throw MissingComparator("resolve needs a comparator; class " + spec.name + " has none");
  Ambient amb(spec, m);
  const int bound = new_bound(spec, opt);
  return fixpoint(base_bound(spec), a, amb, ClosureMode::Resolve, opt, [&](VertexSet base) {
    auto exts = amb.biminimal_extensions(base, bound);
    if (exts.empty()) return VertexSet{};
    auto mins = minimal_among(amb, base, exts);
    return chi.select(mins);
  });
}

bool is_minimal_resolution(const ClassSpec& spec, VertexSet a, VertexSet b, const Graph& m) {
  if (!a.subset_of(b) || !b.subset_of(m.all())) throw InvalidArgument("need a ⊆ b ⊆ m");
  if ((b - a).size() > 12) throw BudgetExceeded("is_minimal_resolution limited to 12 vertices beyond a");
  Ambient amb(spec, m);
  if (!amb.strong_in_m(b)) throw NotAResolution(b.size() == a.size() ? "a is not strong in m" : "b is not strong in m");
  return all_subsets(b - a, [&](VertexSet extra) {
    const VertexSet c = a | extra;
    return c == b || !amb.strong_in_m(c);
  });
}

std::vector<VertexSet> enumerate_minimal_resolutions(const ClassSpec& spec, VertexSet a, const Graph& m, int max_size) {
  if (!a.subset_of(m.all())) throw InvalidArgument("set outside ambient");
  const VertexSet rest = m.all() - a;
  const int extra_bound = max_size < 0 ? -1 : std::max(0, max_size - a.size());
  if (extra_bound < 0 && rest.size() > subset_budget())
    throw BudgetExceeded("enumerate_minimal_resolutions: too many free vertices");
  Ambient amb(spec, m);
  std::vector<VertexSet> candidates;
  for_each_subset_upto(rest, extra_bound, [&](VertexSet extra) { candidates.push_back(a | extra); });
  sort_by_size_then_lex(candidates);
  std::vector<VertexSet> found;
  for (VertexSet b : candidates) {
    if (std::any_of(found.begin(), found.end(), [&](VertexSet f) { return f.subset_of(b); })) continue;
    if (amb.strong_in_m(b)) found.push_back(b);
  }
  return found;
}

bool is_closed_copy(const ClassSpec& spec, VertexSet b, const Graph& m) {
  if (!spec.finitary || !spec.has_comparator())
    throw NonFinitary("closed-copy certificate needs finitary resolutions; class " + spec.name + " lacks them");
  Ambient amb(spec, m);
  const int bound = spec.max_new.value_or(-1);
  bool ok = true;
  for_each_subset_upto(b, base_bound(spec), [&](VertexSet x) {
    if (!ok || x.empty()) return;
    auto exts = amb.biminimal_extensions(x, bound);
    std::vector<VertexSet> inside;
    for (VertexSet y : exts)
      if (y.subset_of(b)) inside.push_back(y);
    const auto mins = minimal_among(amb, x, inside);
    for (VertexSet y : exts) {
      if (y.subset_of(b)) continue;
      // Vacuously below everything when nothing is realized inside b.
      bool below_all = std::all_of(mins.begin(), mins.end(),
                                   [&](VertexSet z) { return amb.compare(x, y, z) == Relation::Less; });
      if (below_all) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

namespace {

class MinimumSearch {
 public:
  MinimumSearch(const ClassSpec& spec, const Graph& m, long budget)
      : spec_(spec), amb_(spec, m), bound_(spec.max_new.value_or(-1)), budget_(budget) {}

  std::optional<VertexSet> run(VertexSet a, int max_size) {
    for (int limit = a.size(); limit <= max_size; ++limit)
      if (auto r = dfs(a, limit)) return r;
    return std::nullopt;
  }

 private:
  const std::vector<VertexSet>& exts(VertexSet x) {
    auto it = exts_.find(x.bits());
    if (it == exts_.end()) it = exts_.emplace(x.bits(), amb_.biminimal_extensions(x, bound_)).first;
    return it->second;
  }

  bool answers(VertexSet x, VertexSet have, VertexSet y) {
    if (!spec_.has_comparator()) return false;
    Relation r = amb_.compare(x, have, y);
    return r == Relation::Less || r == Relation::Equiv;
  }

  // First biminimal pair (X, Y) over s that s does not answer, with the
  // extensions that would answer it.
  std::optional<std::vector<VertexSet>> violation(VertexSet s) {
    std::optional<std::vector<VertexSet>> out;
    for_each_subset_upto(s, spec_.max_base.value_or(-1), [&](VertexSet x) {
      if (out || x.empty()) return;
      const auto& e = exts(x);
      for (VertexSet y : e) {
        if (y.subset_of(s)) continue;
        bool answered = std::any_of(e.begin(), e.end(), [&](VertexSet z) { return z.subset_of(s) && answers(x, z, y); });
        if (answered) continue;
        std::vector<VertexSet> fixes;
        for (VertexSet z : e)
          if (z == y || answers(x, z, y)) fixes.push_back(z);
        out = std::move(fixes);
        return;
      }
    });
    return out;
  }

  std::optional<VertexSet> dfs(VertexSet s, int limit) {
    if (++nodes_ > budget_) throw BudgetExceeded("minimum_resolution node budget exhausted");
    if (s.size() > limit) return std::nullopt;
    auto fixes = violation(s);
    if (!fixes) {
      if (amb_.strong_in_m(s)) return s;
      return exhaustive(s, limit);
    }
    for (VertexSet f : *fixes) {
      VertexSet t = s | f;
      if (t.size() > limit) continue;
      if (auto r = dfs(t, limit)) return r;
    }
    return std::nullopt;
  }

  // The bounded pair search saw nothing, yet s is not strong: fall back on
  // plain supersets of s of exactly the allowed size.
  std::optional<VertexSet> exhaustive(VertexSet s, int limit) {
    const VertexSet rest = amb_.graph().all() - s;
    if (rest.size() > subset_budget()) throw BudgetExceeded("minimum_resolution fallback too large");
    std::vector<VertexSet> cands;
    for_each_subset_upto(rest, limit - s.size(), [&](VertexSet extra) { cands.push_back(s | extra); });
    sort_by_size_then_lex(cands);
    for (VertexSet c : cands)
      if (amb_.strong_in_m(c)) return c;
    return std::nullopt;
  }

  const ClassSpec& spec_;
  Ambient amb_;
  int bound_;
  long budget_;
  long nodes_ = 0;
  std::unordered_map<std::uint64_t, std::vector<VertexSet>> exts_;
};

}  // namespace

std::optional<VertexSet> minimum_resolution(const ClassSpec& spec, VertexSet a, const Graph& m, int max_size,
                                            long node_budget) {
  if (!a.subset_of(m.all())) throw InvalidArgument("set outside ambient");
  return MinimumSearch(spec, m, node_budget).run(a, max_size);
}

}  // namespace amalgam
