#pragma once

// Small graph builders and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "amalgam/graph.hpp"
#include "amalgam/graph_io.hpp"
#include "doctest.h"

namespace testkit {

using amalgam::Graph;
using amalgam::VertexSet;

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Ordered path 0 < 1 < ... < n-1 with all successor edges.
inline Graph ordered_path(int n) {
  Graph g = Graph::ordered(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Graph with n vertices whose edges are the set bits of `code` over the
// pairs (i,j), i<j, in row-major order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Calls fn on every labeled graph with exactly n vertices.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t c = 0; c < total; ++c) fn(graph_from_code(n, c));
}

// Every ordered graph on 0<1<...<n-1 whose edges join successors.
template <typename Fn>
void for_each_kp_graph(int n, Fn&& fn) {
  const int slots = std::max(0, n - 1);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << slots); ++c) {
    Graph g = Graph::ordered(n);
    for (int i = 0; i < slots; ++i)
      if ((c >> i) & 1U) g.add_edge(i, i + 1);
    fn(g);
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Floyd-Warshall, independent of the BFS in the library.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = amalgam::kInf;
  return d;
}

// Longest path by trying every ordering of every subset (n <= 8).
inline int brute_longest_path(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> v = VertexSet(mask).to_vector();
    if (static_cast<int>(v.size()) <= best) continue;
    do {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < v.size() && ok; ++i) ok = g.adjacent(v[i], v[i + 1]);
      if (ok) {
        best = static_cast<int>(v.size());
        break;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return best;
}

}  // namespace testkit

namespace doctest {
template <>
struct StringMaker<amalgam::VertexSet> {
  static String convert(amalgam::VertexSet s) { return amalgam::format_set(s).c_str(); }
};
}  // namespace doctest

