#include "amalgam/companion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "amalgam/enumerate.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/graph_io.hpp"

namespace amalgam {

namespace {

// Labeled key: adjacency rows, then the rank sequence, then the subset.
std::vector<std::uint64_t> labeled_key(const Graph& g, VertexSet a) {
  std::vector<std::uint64_t> key;
  key.reserve(2 * g.size() + 2);
  key.push_back(static_cast<std::uint64_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) key.push_back(g.neighbors(v).bits());
  for (int v : g.order()) key.push_back(static_cast<std::uint64_t>(v));
  key.push_back(a.bits());
  return key;
}

class ForallMemo {
 public:
  std::optional<bool> find(const std::vector<std::uint64_t>& key) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(std::vector<std::uint64_t> key, bool value) {
    std::unique_lock lock(mu_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::vector<std::uint64_t>, bool> table_;
};

bool forall_strong(const ClassSpec& base, VertexSet a, const Graph& b) {
  if (b.size() > 12) throw BudgetExceeded("derived strong predicate limited to 12 vertices");
  Ambient amb(base, b);
  return all_subsets(b.all(), [&](VertexSet y) {
    if (y.subset_of(a)) return true;
    return all_subsets(y & a, [&](VertexSet x) { return x == y || !amb.is_minimal_pair(x, y); });
  });
}

template <typename Fn>
void run_jobs(int jobs, std::size_t count, Fn&& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < count; i += jobs) fn(i);
    });
}

}  // namespace

ClassSpec derive_forall(const ClassSpec& spec) {
  auto base = std::make_shared<const ClassSpec>(spec);
  auto memo = std::make_shared<ForallMemo>();
  ClassSpec out;
  out.name = "forall(" + spec.name + ")";
  out.summary = "universal companion derived from the minimal pairs of " + spec.name;
  out.membership = spec.membership;
  out.requires_order = spec.requires_order;
  out.max_base = spec.max_base;
  out.max_new = spec.max_new;
  out.finitary = false;
  out.strong = [base, memo](VertexSet a, const Graph& b) {
    auto key = labeled_key(b, a);
    if (auto hit = memo->find(key)) return *hit;
    const bool r = forall_strong(*base, a, b);
    memo->insert(std::move(key), r);
    return r;
  };
  return out;
}

CoincideVerdict biminimal_coincide(const ClassSpec& first, const ClassSpec& second, int max_total, int jobs) {
  if (max_total > 6) throw BudgetExceeded("biminimal_coincide limited to 6 vertices");
  if (first.requires_order != second.requires_order) {
    CoincideVerdict v;
    v.outcome = Outcome::Fail;
    v.y = first.empty_graph();
    v.first = true;
    v.detail = "membership differs: one class is ordered, the other is not";
    return v;
  }
  for (int n = 0; n <= max_total; ++n) {
    // Candidates from either class so that membership mismatches show up.
    ClassSpec any = first;
    any.membership = [&](const Graph& g) { return first.membership(g) || second.membership(g); };
    const auto graphs = members_up_to_iso(any, n);
    std::vector<std::optional<CoincideVerdict>> found(graphs.size());
    run_jobs(jobs, graphs.size(), [&](std::size_t i) {
      const Graph& y = graphs[i];
      const bool in1 = first.membership(y), in2 = second.membership(y);
      if (in1 != in2) {
        found[i] = CoincideVerdict{Outcome::Fail, y, {}, in1, in2, "membership differs"};
        return;
      }
      Ambient a1(first, y), a2(second, y);
      for_each_subset(y.all(), [&](VertexSet x) {
        if (found[i] || x == y.all()) return;
        const bool b1 = a1.is_biminimal_pair(x, y.all()), b2 = a2.is_biminimal_pair(x, y.all());
        if (b1 != b2) found[i] = CoincideVerdict{Outcome::Fail, y, x, b1, b2, "biminimal pairs differ"};
      });
    });
    for (auto& f : found)
      if (f) return *f;
  }
  return {};
}

CoincideVerdict roundtrip_check(const ClassSpec& base, const ClassSpec& companion, int bound, int jobs) {
  const auto axioms = check_axioms(base, 4);
  if (!axioms.get("A6").pass) {
    CoincideVerdict v;
    v.outcome = Outcome::Precondition;
    v.detail = "base class " + base.name + " fails A6, so it has no universal closures";
    return v;
  }
  return biminimal_coincide(base, derive_forall(companion), bound, jobs);
}

std::optional<FreeAmalgWitness> find_free_amalg_counterexample(const ClassSpec& spec, int max_a, int max_ext) {
  if (max_a > 5 || max_ext > 2) throw BudgetExceeded("free-amalgamation search limited to (5, 2)");
  for (int k = 0; k <= max_a; ++k) {
    const VertexSet a_set = VertexSet::range(k);
    for (const Graph& a : members_up_to_iso(spec, k)) {
      std::vector<std::vector<Graph>> by_size(max_ext + 1);
      for (int e = 1; e <= max_ext; ++e)
        for (Graph& b : extensions_up_to_iso(a, e))
          if (spec.membership(b) && spec.strong(a_set, b)) by_size[e].push_back(std::move(b));
      for (int total = 2; total <= 2 * max_ext; ++total)
        for (int e1 = std::max(1, total - max_ext); e1 <= total / 2; ++e1) {
          const int e2 = total - e1;
          const auto& bs = by_size[e1];
          const auto& cs = by_size[e2];
          for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = (e1 == e2 ? i : 0); j < cs.size(); ++j) {
              Graph d = free_amalgam(a_set, bs[i], cs[j]);
              FreeAmalgWitness w{a, bs[i], cs[j], d, VertexSet::range(bs[i].size()),
                                 a_set | (d.all() - VertexSet::range(bs[i].size())), ""};
              if (!spec.membership(d)) {
                w.reason = "free amalgam is not in the class";
                return w;
              }
              Ambient amb(spec, d);
              if (!amb.strong_in_m(w.b_in_d)) w.reason = "B is not strong in the free amalgam";
              else if (!amb.strong_in_m(w.c_in_d)) w.reason = "C is not strong in the free amalgam";
              if (!w.reason.empty()) return w;
            }
        }
    }
  }
  return std::nullopt;
}

}  // namespace amalgam
