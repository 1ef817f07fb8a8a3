#include "amalgam/generic.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "amalgam/enumerate.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/graph_io.hpp"
#include "amalgam/kernel.hpp"

namespace amalgam {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

PartialMap anchor_of(const Pattern& p, const Embedding& f) {
  PartialMap anchor(p.b.size(), -1);
  for (int i = 0; i < p.a.size(); ++i) anchor[i] = f.map[i];
  return anchor;
}

// Image of a strong extension of f to B inside m, if any.
std::optional<VertexSet> find_extension(Ambient& amb, const Pattern& p, const Embedding& f) {
  for (const auto& e : extensions_over(f.image(), amb.graph(), p.b, anchor_of(p, f)))
    if (amb.strong_in_m(e.image())) return e.image();
  return std::nullopt;
}

// Strong embeddings of each pattern's A into m, in pattern then lexicographic order.
template <typename Fn>
void for_each_strong_embedding(Ambient& amb, const std::vector<Pattern>& patterns, Fn&& fn) {
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const PartialMap free(patterns[p].a.size(), -1);
    for (auto& f : enumerate_embeddings(patterns[p].a, amb.graph(), free))
      if (amb.strong_in_m(f.image())) fn(static_cast<int>(p), std::move(f));
  }
}

}  // namespace

std::vector<Pattern> pattern_catalogue(const ClassSpec& spec, int bound) {
  if (bound < 0 || bound > 5) throw BudgetExceeded("pattern bound must lie in 0..5");
  std::vector<Pattern> out;
  for (int total = 1; total <= bound; ++total)
    for (int k = 0; k < total; ++k)
      for (const Graph& a : members_up_to_iso(spec, k))
        for (Graph& b : extensions_up_to_iso(a, total - k))
          if (spec.membership(b) && spec.strong(VertexSet::range(k), b)) out.push_back({a, std::move(b)});
  return out;
}

std::string StageLog::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << " bound " << pattern_bound << '\n';
  for (const auto& r : records) {
    os << "stage " << r.stage << " snapshot " << r.snapshot << " n " << r.vertices << " discovered " << r.discovered
       << " amalgams " << r.amalgams << " open " << r.open;
    if (!r.served.empty()) os << " served " << r.served;
    os << '\n';
  }
  os << "digest " << digest << '\n';
  return os.str();
}

BuildResult build_generic(const ClassSpec& spec, const BuildOptions& opt) {
  if (opt.stages < 0) throw InvalidArgument("negative stage count");
  const auto patterns = pattern_catalogue(spec, opt.pattern_bound);
  std::mt19937_64 rng(opt.seed);

  BuildResult res;
  res.m = spec.empty_graph();
  res.log.seed = opt.seed;
  res.log.pattern_bound = opt.pattern_bound;
  std::deque<int> queue;
  std::set<std::vector<int>> seen;
  int amalgams = 0;

  auto record = [&](int stage, int discovered, std::string served) {
    StageRecord r;
    r.stage = stage;
    r.snapshot = hex(fnv1a(to_text(res.m)));
    r.vertices = res.m.size();
    r.discovered = discovered;
    r.amalgams = amalgams;
    r.open = static_cast<int>(queue.size());
    r.served = std::move(served);
    res.log.records.push_back(std::move(r));
    res.sizes.push_back(res.m.size());
  };
  record(0, 0, "");

  for (int stage = 1; stage <= opt.stages; ++stage) {
    Ambient amb(spec, res.m);

    std::vector<std::pair<int, Embedding>> fresh;
    for_each_strong_embedding(amb, patterns, [&](int p, Embedding f) {
      std::vector<int> key{p};
      key.insert(key.end(), f.map.begin(), f.map.end());
      if (!seen.contains(key)) fresh.emplace_back(p, std::move(f));
    });
    std::shuffle(fresh.begin(), fresh.end(), rng);
    if (static_cast<int>(fresh.size()) > opt.discovery_cap) fresh.resize(opt.discovery_cap);
    for (auto& [p, f] : fresh) {
      std::vector<int> key{p};
      key.insert(key.end(), f.map.begin(), f.map.end());
      seen.insert(std::move(key));
      res.tasks.push_back({p, std::move(f), TaskStatus::Open, {}});
      queue.push_back(static_cast<int>(res.tasks.size()) - 1);
    }
    const int discovered = static_cast<int>(fresh.size());

    std::string served;
    while (!queue.empty()) {
      Task& t = res.tasks[queue.front()];
      queue.pop_front();
      const Pattern& pat = patterns[t.pattern];
      if (auto w = find_extension(amb, pat, t.f)) {
        t.status = TaskStatus::Satisfied;
        t.witness = *w;
        continue;
      }
      const Graph before = res.m;
      Graph d = amalgamate(before, pat.b, anchor_of(pat, t.f));
      const VertexSet image = t.f.image() | (d.all() - before.all());
      auto fail = [&](const std::string& why) {
        throw AmalgamationError("stage " + std::to_string(stage) + ": " + why + "\nA:\n" + to_text(pat.a) + "B:\n" +
                                to_text(pat.b) + "M:\n" + to_text(before) + "image of A " + format_set(t.f.image()));
      };
      if (!spec.membership(d)) fail("free amalgam left the class");
      if (opt.verify_chain && !is_strong_bruteforce(spec, before.all(), d)) fail("stage not strong in its successor");
      Ambient next(spec, d);
      if (!next.strong_in_m(image)) fail("copy of B not strong in the amalgam");
      t.status = TaskStatus::Satisfied;
      t.witness = image;
      res.m = std::move(d);
      ++amalgams;
      served = "pattern " + std::to_string(t.pattern) + " via " + format_set(image);
      break;
    }
    record(stage, discovered, std::move(served));
  }

  std::uint64_t h = fnv1a("seed " + std::to_string(opt.seed));
  for (const auto& r : res.log.records)
    h = fnv1a(std::to_string(r.stage) + r.snapshot + std::to_string(r.discovered) + std::to_string(r.open) + r.served, h);
  res.log.digest = hex(h);
  return res;
}

InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, const std::vector<Pattern>& patterns,
                                     VertexSet within) {
  Ambient amb(spec, m);
  InjectivityReport rep;
  for_each_strong_embedding(amb, patterns, [&](int p, Embedding f) {
    if (!f.image().subset_of(within)) return;
    ++rep.tasks;
    if (find_extension(amb, patterns[p], f))
      ++rep.satisfied;
    else
      rep.unmet.push_back({p, std::move(f)});
  });
  return rep;
}

InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, int pattern_bound, VertexSet within) {
  if (pattern_bound > 4) throw BudgetExceeded("verify_injectivity bound limited to 4");
  return verify_injectivity(spec, m, pattern_catalogue(spec, pattern_bound), within);
}

InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, int pattern_bound) {
  return verify_injectivity(spec, m, pattern_bound, m.all());
}

bool verify_age(const ClassSpec& spec, const Graph& m, int max_size) {
  bool ok = true;
  for_each_subset_upto(m.all(), max_size, [&](VertexSet s) {
    if (ok && !spec.membership(induced(m, s))) ok = false;
  });
  return ok;
}

}  // namespace amalgam
