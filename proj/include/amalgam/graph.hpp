#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace amalgam {

inline constexpr int kMaxVertices = 64;

/// A set of vertex indices of some ambient graph, stored as a bitmask.
/// Iteration yields the indices in strictly increasing order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet of(std::span<const int> vertices);
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr int last() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

  /// Lexicographic comparison of the sorted index lists.
  bool lex_less(VertexSet other) const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of s, in increasing bitmask order.
template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(VertexSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Like for_each_subset but stops early when fn returns false. Returns false
/// if stopped.
template <typename Fn>
bool all_subsets(VertexSet s, Fn&& fn) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    if (!fn(VertexSet(sub))) return false;
    if (sub == full) return true;
    sub = (sub - full) & full;
  }
}

/// Subsets of s with at most max_size elements, in increasing bitmask order.
/// max_size < 0 means unbounded.
template <typename Fn>
void for_each_subset_upto(VertexSet s, int max_size, Fn&& fn) {
  if (max_size < 0 || max_size >= s.size()) {
    for_each_subset(s, fn);
    return;
  }
  std::vector<int> items = s.to_vector();
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t acc) -> void {
    fn(VertexSet(acc));
    if (static_cast<int>(pick.size()) == max_size) return;
    for (std::size_t i = start; i < items.size(); ++i) {
      pick.push_back(items[i]);
      self(self, i + 1, acc | (std::uint64_t{1} << items[i]));
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
}

/// Re-expresses `a` (a subset of `s`) in the coordinates of induced(g, s),
/// where the vertices of s are renumbered 0..|s|-1 in ascending order.
VertexSet restrict_to(VertexSet a, VertexSet s);

/// Inverse of restrict_to: lifts a set of induced(g, s)-indices back to g.
VertexSet lift_from(VertexSet local, VertexSet s);

/// Finite simple graph on vertices 0..n-1, optionally carrying a total order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// n vertices ordered 0 < 1 < ... < n-1.
  static Graph ordered(int n);

  int size() const { return static_cast<int>(adj_.size()); }
  VertexSet all() const { return VertexSet::range(size()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  /// Edges inside s.
  int edge_count(VertexSet s) const;
  std::vector<std::pair<int, int>> edges() const;

  bool has_order() const { return ordered_; }
  /// Sets the total order; `sequence` lists the vertices from least to greatest.
  void set_order(std::span<const int> sequence);
  void clear_order();
  /// Vertices from least to greatest; empty when unordered.
  const std::vector<int>& order() const { return by_rank_; }
  int rank(int v) const { return rank_[v]; }
  std::optional<int> successor(int v) const;
  std::optional<int> predecessor(int v) const;

  /// Appends an isolated vertex. Ordered graphs place it at the given rank.
  int add_vertex();
  int add_vertex_at_rank(int rank);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  std::vector<std::uint64_t> adj_;
  std::vector<int> rank_;
  std::vector<int> by_rank_;
  bool ordered_ = false;
};

inline constexpr int kInf = std::numeric_limits<int>::max();
using DistanceMatrix = std::vector<std::vector<int>>;

/// Geodesic distances; kInf for unreachable pairs.
DistanceMatrix distance_matrix(const Graph& g);

/// All simple paths a -> b with at most max_len edges, lexicographic order.
std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g, int a, int b, int max_len);

/// Number of vertices on a longest simple path (exact branch and bound).
int longest_path_order(const Graph& g);

/// lambda(S) for every subset S of the vertices, indexed by bitmask.
/// Requires n <= 20.
std::vector<int> longest_path_table(const Graph& g);

/// For each bitmask `mask` and vertex v: the set of start vertices s such
/// that some simple path from s to v visits exactly `mask`. Row-major
/// [mask * n + v]. Requires n <= 16.
std::vector<std::uint64_t> path_cover_table(const Graph& g);

/// Induced substructure on s, relabeled 0..|s|-1 by ascending index.
Graph induced(const Graph& g, VertexSet s);

/// Vertex sets of the connected components, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);
VertexSet component_of(const Graph& g, int v);

/// Injective vertex map of `domain` into `codomain`: map[i] is the image of i.
struct Embedding {
  std::vector<int> map;

  VertexSet image() const;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True if `map` is an induced (edge-preserving and edge-reflecting)
/// embedding, order-preserving when both graphs are ordered.
bool is_embedding(const Graph& domain, const Graph& codomain, std::span<const int> map);

/// Partial map: anchor[i] is the image of shape vertex i or -1 if free.
using PartialMap = std::vector<int>;

/// Every full embedding of shape into m agreeing with the anchor, in
/// lexicographic order of the image sequence.
std::vector<Embedding> enumerate_embeddings(const Graph& shape, const Graph& m, const PartialMap& anchor);

/// Extensions of the anchor to embeddings of shape into m, keeping one
/// embedding per image set. `base` must equal the anchor's image.
std::vector<Embedding> extensions_over(VertexSet base, const Graph& m, const Graph& shape,
                                       const PartialMap& anchor);

}  // namespace amalgam
