#include "amalgam/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

struct Slot {
  int u, v;
};

// Edge slots touching at least one new vertex, new vertices k..k+j-1.
std::vector<Slot> new_slots(int k, int j) {
  std::vector<Slot> slots;
  for (int v = k; v < k + j; ++v)
    for (int u = 0; u < v; ++u) slots.push_back({u, v});
  return slots;
}

std::vector<Graph> unordered_extensions(const Graph& base, int j) {
  const int k = base.size();
  const int n = k + j;
  if (n > kMaxVertices) throw BudgetExceeded("extension too large");
  const auto slots = new_slots(k, j);
  const int bits = static_cast<int>(slots.size());
  if (bits > 24) throw BudgetExceeded("too many edge slots for isomorphism-free extension");

  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
  for (int b = 0; b < bits; ++b) slot_index[slots[b].u][slots[b].v] = slot_index[slots[b].v][slots[b].u] = b;

  // For every non-identity permutation of the new vertices, the induced map on slots.
  std::vector<std::vector<int>> slot_perms;
  std::vector<int> perm(j);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto image = [&](int v) { return v < k ? v : k + perm[v - k]; };
    std::vector<int> sp(bits);
    for (int b = 0; b < bits; ++b) sp[b] = slot_index[image(slots[b].u)][image(slots[b].v)];
    slot_perms.push_back(std::move(sp));
  }

  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t code = 0; code < total; ++code) {
    bool minimal = true;
    for (const auto& sp : slot_perms) {
      std::uint64_t img = 0;
      for (int b = 0; b < bits; ++b)
        if ((code >> b) & 1U) img |= std::uint64_t{1} << sp[b];
      if (img < code) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Graph g(n);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int b = 0; b < bits; ++b)
      if ((code >> b) & 1U) g.add_edge(slots[b].u, slots[b].v);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> ordered_extensions(const Graph& base, int j) {
  const int k = base.size();
  const int n = k + j;
  const auto slots = new_slots(k, j);
  const int bits = static_cast<int>(slots.size());
  if (bits > 20) throw BudgetExceeded("too many edge slots for ordered extension");
  std::vector<Graph> out;
  // Choose which final ranks hold new vertices.
  for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << n); ++pos) {
    if (std::popcount(pos) != j) continue;
    std::vector<int> seq;
    int next_old = 0, next_new = k;
    for (int r = 0; r < n; ++r) seq.push_back(((pos >> r) & 1U) ? next_new++ : base.order()[next_old++]);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      Graph g(n);
      g.set_order(seq);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int b = 0; b < bits; ++b)
        if ((code >> b) & 1U) g.add_edge(slots[b].u, slots[b].v);
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> extensions_up_to_iso(const Graph& base, int num_new) {
  if (num_new < 0) throw InvalidArgument("negative extension size");
  return base.has_order() ? ordered_extensions(base, num_new) : unordered_extensions(base, num_new);
}

const std::vector<Graph>& graphs_up_to_iso(int n) {
  if (n < 0 || n > 7) throw BudgetExceeded("graphs_up_to_iso limited to 7 vertices");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, unordered_extensions(Graph(0), n)).first;
  return it->second;
}

std::vector<Graph> ordered_graphs(int n) {
  if (n < 0 || n > 6) throw BudgetExceeded("ordered_graphs limited to 6 vertices");
  return ordered_extensions(Graph::ordered(0), n);
}

std::vector<std::uint64_t> canonical_key(const Graph& g, VertexSet fixed) {
  const int n = g.size();
  std::vector<std::uint64_t> key;
  key.push_back(static_cast<std::uint64_t>(n));
  key.push_back(static_cast<std::uint64_t>(fixed.size()));
  if (g.has_order()) {
    // Rigid: relabel by rank, then record which fixed vertex sits at each rank.
    key.push_back(1);
    for (int r = 0; r < n; ++r) {
      int v = g.order()[r];
      std::uint64_t row = 0;
      for (int w : g.neighbors(v)) row |= std::uint64_t{1} << g.rank(w);
      key.push_back(row);
      key.push_back(fixed.contains(v) ? static_cast<std::uint64_t>(v) + 1 : 0);
    }
    return key;
  }
  key.push_back(0);
  std::vector<int> head = fixed.to_vector();
  std::vector<int> tail = (g.all() - fixed).to_vector();
  if (tail.size() > 9) throw BudgetExceeded("canonical_key limited to 9 free vertices");
  std::vector<std::uint64_t> best;
  do {
    std::vector<int> label(head);
    label.insert(label.end(), tail.begin(), tail.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[label[i]] = i;
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i)
      for (int w : g.neighbors(label[i])) rows[i] |= std::uint64_t{1} << pos[w];
    if (best.empty() || rows < best) best = std::move(rows);
  } while (std::next_permutation(tail.begin(), tail.end()));
  key.insert(key.end(), best.begin(), best.end());
  return key;
}

}  // namespace amalgam
