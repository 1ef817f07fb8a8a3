#pragma once

#include <cstdint>
#include <vector>

#include "amalgam/graph.hpp"

namespace amalgam {

/// Extensions of `base` by `num_new` vertices, one per isomorphism class
/// over base (base fixed pointwise). Base occupies vertices 0..k-1 of each
/// result, new vertices follow. Ordered bases yield ordered extensions; the
/// new vertices are numbered in increasing rank and every interleaving
/// appears (ordered graphs are rigid). Deterministic order.
/// Unordered: k*num_new + C(num_new,2) <= 24 edge slots.
std::vector<Graph> extensions_up_to_iso(const Graph& base, int num_new);

/// All graphs on n vertices up to isomorphism (n <= 7, cached).
const std::vector<Graph>& graphs_up_to_iso(int n);

/// All ordered graphs on 0 < 1 < ... < n-1 (n <= 6).
std::vector<Graph> ordered_graphs(int n);

/// Isomorphism invariant of g relative to `fixed` (those vertices are held
/// pointwise). Equal keys iff an isomorphism fixing `fixed` exists. Brute
/// force over permutations of the free vertices; at most 9 free vertices.
std::vector<std::uint64_t> canonical_key(const Graph& g, VertexSet fixed = {});

}  // namespace amalgam
