#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/class_spec.hpp"
#include "amalgam/generic.hpp"
#include "amalgam/graph.hpp"

namespace amalgam {

/// Finite stand-in for a structure made of ordered paths separated by
/// dense orders: paths with successor edges and isolated filler vertices
/// in the gaps. Vertex ids equal ranks.
struct Truncation {
  Graph g;
  int num_paths = 0;
  int path_len = 0;  // edges per path
  int filler = 0;
  int margin = 0;
  std::vector<std::vector<int>> paths;  // ascending
  std::vector<int> filler_vertices;

  /// Vertices at order-distance >= margin from both ends.
  VertexSet interior() const;
  /// Index of v on its path, or nullopt for filler.
  std::optional<std::pair<int, int>> path_position(int v) const;
};

/// Filler spreads over the num_paths + 1 gaps, earlier gaps taking any
/// remainder. Throws InvalidArgument on non-positive paths/length, negative
/// filler or margin, or more than 64 vertices.
Truncation build_truncation(int num_paths, int path_len, int filler, int margin);

/// Chain X_0 ⊊ X_1 ⊊ ... ⊊ X_length of minimal pairs, each X_i on the first
/// vertices of X_{i+1}. Depth-first over extensions by 1..max_new vertices
/// in enumeration order (new vertices at the lowest rank first).
/// nullopt when the search space or node budget is exhausted. length <= 20.
std::optional<std::vector<Graph>> find_minimal_pair_chain(const ClassSpec& spec, int length, int max_new = 2,
                                                          long node_budget = 200'000);

struct GrowthRow {
  int radius = 0;
  int window = 0;                // vertices in the order window
  std::optional<int> size;       // nullopt: no resolution inside the window
  VertexSet resolution;          // in truncation coordinates
};

/// Smallest resolution of {x} inside the window of vertices within
/// order-distance r, for each r. Throws InvalidArgument when a radius
/// exceeds the margin or a path vertex's window leaves its path.
std::vector<GrowthRow> closure_growth(const ClassSpec& spec, int x, const Truncation& t, const std::vector<int>& radii);

std::string growth_table_text(const std::vector<GrowthRow>& rows);
std::string growth_table_csv(const std::vector<GrowthRow>& rows);

/// verify_injectivity on t restricted to embeddings inside t.interior().
/// bound <= 3.
InjectivityReport injectivity_suite(const ClassSpec& spec, const Truncation& t, int bound);

}  // namespace amalgam
