#include "amalgam/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "amalgam/errors.hpp"

namespace amalgam {

int subset_budget() {
  if (const char* env = std::getenv("AMALGAM_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v <= 62) return static_cast<int>(v);
  }
  return 20;
}

// --- VertexSet ---------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("vertex index out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::of(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("vertex index out of range: " + std::to_string(v));
    s = s.with(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

bool VertexSet::lex_less(VertexSet other) const {
  auto a = begin();
  auto b = other.begin();
  for (; a != end() && b != other.end(); ++a, ++b) {
    if (*a != *b) return *a < *b;
  }
  return a == end() && b != other.end();
}

VertexSet restrict_to(VertexSet a, VertexSet s) {
  std::uint64_t out = 0;
  int i = 0;
  for (int v : s) {
    if (a.contains(v)) out |= std::uint64_t{1} << i;
    ++i;
  }
  return VertexSet(out);
}

VertexSet lift_from(VertexSet local, VertexSet s) {
  std::uint64_t out = 0;
  int i = 0;
  for (int v : s) {
    if (local.contains(i)) out |= std::uint64_t{1} << v;
    ++i;
  }
  return VertexSet(out);
}

// --- Graph -------------------------------------------------------------

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("graph size out of range: " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::ordered(int n) {
  Graph g(n);
  g.ordered_ = true;
  g.rank_.resize(static_cast<std::size_t>(n));
  g.by_rank_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.rank_[i] = g.by_rank_[i] = i;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw InvalidArgument("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::edge_count(VertexSet s) const {
  int twice = 0;
  for (int v : s) twice += std::popcount(adj_[v] & s.bits());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
  return out;
}

void Graph::set_order(std::span<const int> sequence) {
  if (static_cast<int>(sequence.size()) != size()) throw InvalidArgument("order must list every vertex exactly once");
  std::vector<int> rank(sequence.size(), -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    int v = sequence[i];
    if (v < 0 || v >= size() || rank[v] != -1) throw InvalidArgument("order is not a permutation");
    rank[v] = static_cast<int>(i);
  }
  rank_ = std::move(rank);
  by_rank_.assign(sequence.begin(), sequence.end());
  ordered_ = true;
}

void Graph::clear_order() {
  rank_.clear();
  by_rank_.clear();
  ordered_ = false;
}

std::optional<int> Graph::successor(int v) const {
  int r = rank_[v];
  if (r + 1 >= size()) return std::nullopt;
  return by_rank_[r + 1];
}

std::optional<int> Graph::predecessor(int v) const {
  int r = rank_[v];
  if (r == 0) return std::nullopt;
  return by_rank_[r - 1];
}

int Graph::add_vertex() {
  if (ordered_) return add_vertex_at_rank(size());
  if (size() >= kMaxVertices) throw BudgetExceeded("graph limited to 64 vertices");
  adj_.push_back(0);
  return size() - 1;
}

int Graph::add_vertex_at_rank(int rank) {
  if (!ordered_) throw InvalidArgument("add_vertex_at_rank on an unordered graph");
  if (size() >= kMaxVertices) throw BudgetExceeded("graph limited to 64 vertices");
  if (rank < 0 || rank > size()) throw InvalidArgument("rank out of range");
  int v = size();
  adj_.push_back(0);
  by_rank_.insert(by_rank_.begin() + rank, v);
  rank_.push_back(0);
  for (int i = 0; i < size(); ++i) rank_[by_rank_[i]] = i;
  return v;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adj_ == b.adj_ && a.ordered_ == b.ordered_ && a.by_rank_ == b.by_rank_;
}

// --- metric and path computations ---------------------------------------

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.size();
  DistanceMatrix d(n, std::vector<int>(n, kInf));
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto& row = d[s];
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (row[w] == kInf) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g, int a, int b, int max_len) {
  if (a < 0 || b < 0 || a >= g.size() || b >= g.size()) throw InvalidArgument("path endpoint out of range");
  if (a == b) throw InvalidArgument("enumerate_simple_paths requires distinct endpoints");
  std::vector<std::vector<int>> out;
  std::vector<int> path{a};
  auto dfs = [&](auto&& self, int u, std::uint64_t visited) -> void {
    if (u == b) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    for (int w : VertexSet(g.neighbors(u).bits() & ~visited)) {
      path.push_back(w);
      self(self, w, visited | (std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  dfs(dfs, a, std::uint64_t{1} << a);
  return out;
}

namespace {

int reachable_count(const Graph& g, int from, std::uint64_t blocked) {
  std::uint64_t seen = std::uint64_t{1} << from;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (int u : VertexSet(frontier)) next |= g.neighbors(u).bits();
    next &= ~seen & ~blocked;
    seen |= next;
    frontier = next;
  }
  return std::popcount(seen);
}

}  // namespace

int longest_path_order(const Graph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  int best = 1;
  auto dfs = [&](auto&& self, int u, std::uint64_t visited, int len) -> void {
    best = std::max(best, len);
    if (best == n) return;
    // Upper bound: every vertex still reachable from u could be appended.
    if (len - 1 + reachable_count(g, u, visited & ~(std::uint64_t{1} << u)) <= best) return;
    for (int w : VertexSet(g.neighbors(u).bits() & ~visited)) {
      self(self, w, visited | (std::uint64_t{1} << w), len + 1);
      if (best == n) return;
    }
  };
  for (int s = 0; s < n && best < n; ++s) dfs(dfs, s, std::uint64_t{1} << s, 1);
  return best;
}

std::vector<int> longest_path_table(const Graph& g) {
  const int n = g.size();
  if (n > 20) throw BudgetExceeded("longest_path_table limited to 20 vertices");
  const std::size_t full = std::size_t{1} << n;
  // ends[mask]: vertices v such that a simple path covering exactly mask ends at v.
  std::vector<std::uint32_t> ends(full, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint64_t ext = g.neighbors(v).bits() & ~static_cast<std::uint64_t>(mask);
      for (int w : VertexSet(ext)) ends[mask | (std::size_t{1} << w)] |= 1U << w;
    }
  }
  std::vector<int> lam(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    int best = ends[mask] ? std::popcount(mask) : 0;
    if (best != std::popcount(mask)) {
      for (int v : VertexSet(mask)) best = std::max(best, lam[mask & ~(std::size_t{1} << v)]);
    }
    lam[mask] = best;
  }
  return lam;
}

std::vector<std::uint64_t> path_cover_table(const Graph& g) {
  const int n = g.size();
  if (n > 16) throw BudgetExceeded("path_cover_table limited to 16 vertices");
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint64_t> starts(full * static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) starts[(std::size_t{1} << v) * n + v] = std::uint64_t{1} << v;
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int v : VertexSet(mask)) {
      std::uint64_t s = starts[mask * n + v];
      if (!s) continue;
      for (int w : VertexSet(g.neighbors(v).bits() & ~static_cast<std::uint64_t>(mask)))
        starts[(mask | (std::size_t{1} << w)) * n + w] |= s;
    }
  }
  return starts;
}

Graph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw InvalidArgument("induced: vertex set out of range");
  const std::vector<int> verts = s.to_vector();
  const int k = static_cast<int>(verts.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(verts[i], verts[j])) out.add_edge(i, j);
  if (g.has_order()) {
    std::vector<int> local(verts.size());
    for (int i = 0; i < k; ++i) local[i] = i;
    std::sort(local.begin(), local.end(), [&](int x, int y) { return g.rank(verts[x]) < g.rank(verts[y]); });
    out.set_order(local);
  }
  return out;
}

VertexSet component_of(const Graph& g, int v) {
  std::uint64_t seen = std::uint64_t{1} << v;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (int u : VertexSet(frontier)) next |= g.neighbors(u).bits();
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.all();
  while (!left.empty()) {
    VertexSet c = component_of(g, left.first());
    out.push_back(c);
    left = left - c;
  }
  return out;
}

// --- embeddings --------------------------------------------------------

VertexSet Embedding::image() const {
  VertexSet s;
  for (int v : map) s = s.with(v);
  return s;
}

bool is_embedding(const Graph& domain, const Graph& codomain, std::span<const int> map) {
  if (static_cast<int>(map.size()) != domain.size()) return false;
  VertexSet used;
  for (int v : map) {
    if (v < 0 || v >= codomain.size() || used.contains(v)) return false;
    used = used.with(v);
  }
  const bool check_order = domain.has_order() && codomain.has_order();
  for (int i = 0; i < domain.size(); ++i) {
    for (int j = i + 1; j < domain.size(); ++j) {
      if (domain.adjacent(i, j) != codomain.adjacent(map[i], map[j])) return false;
      if (check_order && ((domain.rank(i) < domain.rank(j)) != (codomain.rank(map[i]) < codomain.rank(map[j]))))
        return false;
    }
  }
  return true;
}

std::vector<Embedding> enumerate_embeddings(const Graph& shape, const Graph& m, const PartialMap& anchor) {
  const int k = shape.size();
  if (static_cast<int>(anchor.size()) != k) throw InvalidArgument("anchor size must equal shape size");
  const bool check_order = shape.has_order() && m.has_order();
  std::vector<int> map(anchor.begin(), anchor.end());
  std::uint64_t used = 0;
  for (int v : anchor) {
    if (v < 0) continue;
    if (v >= m.size()) throw InvalidArgument("anchor image out of range");
    if ((used >> v) & 1U) return {};
    used |= std::uint64_t{1} << v;
  }
  auto consistent = [&](int i, int img) {
    for (int j = 0; j < k; ++j) {
      if (j == i || map[j] < 0) continue;
      if (shape.adjacent(i, j) != m.adjacent(img, map[j])) return false;
      if (check_order && ((shape.rank(i) < shape.rank(j)) != (m.rank(img) < m.rank(map[j])))) return false;
    }
    return true;
  };
  // The anchor itself must be a partial embedding.
  for (int i = 0; i < k; ++i)
    if (map[i] >= 0 && !consistent(i, map[i])) return {};

  std::vector<Embedding> out;
  auto rec = [&](auto&& self, int i) -> void {
    while (i < k && anchor[i] >= 0) ++i;
    if (i == k) {
      out.push_back(Embedding{map});
      return;
    }
    for (int img = 0; img < m.size(); ++img) {
      if ((used >> img) & 1U) continue;
      if (!consistent(i, img)) continue;
      map[i] = img;
      used |= std::uint64_t{1} << img;
      self(self, i + 1);
      used &= ~(std::uint64_t{1} << img);
      map[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Embedding> extensions_over(VertexSet base, const Graph& m, const Graph& shape, const PartialMap& anchor) {
  VertexSet anchored;
  for (int v : anchor)
    if (v >= 0) anchored = anchored.with(v);
  if (anchored != base) throw InvalidArgument("extensions_over: anchor does not map onto base");
  std::vector<Embedding> all = enumerate_embeddings(shape, m, anchor);
  std::vector<Embedding> out;
  std::set<std::uint64_t> seen;
  for (auto& e : all)
    if (seen.insert(e.image().bits()).second) out.push_back(std::move(e));
  return out;
}

}  // namespace amalgam
