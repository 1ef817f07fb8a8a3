#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/class_spec.hpp"
#include "amalgam/graph.hpp"

namespace amalgam {

enum class ClosureMode { Mcl, Resolve };
const char* to_string(ClosureMode m);

struct ClosureReport {
  VertexSet input;
  VertexSet result;
  /// Cumulative layers I_0 ⊆ I_1 ⊆ ... (or J_n); the last equals result.
  std::vector<VertexSet> layers;
  ClosureMode mode = ClosureMode::Mcl;
  std::optional<bool> minimal;
  std::optional<int> alternatives;
  bool verified_strong = false;
  /// The result meets the caller's boundary set (vertices whose
  /// neighbourhood the finite ambient may have cut off).
  bool touches_boundary = false;
};

/// Picks one extension among the ≼-minimal ones realized in the ambient.
/// Candidates arrive sorted by size, then lexicographically, never empty.
struct ChiStrategy {
  std::string name;
  std::function<VertexSet(std::span<const VertexSet>)> select;

  static ChiStrategy lexicographic();
  static ChiStrategy reverse_lexicographic();
};

/// Options shared by the closure computations.
struct ClosureOptions {
  /// New-vertex bound for extensions; negative uses the class hint, or no
  /// bound when the class has none.
  int max_new = -1;
  /// Base-size bound for mcl's minimal pairs; unset uses the class hint,
  /// negative quantifies over every subset of the layer.
  std::optional<int> mcl_max_base;
  VertexSet boundary;
};

/// Maximal closure: iterate adding every minimal-pair extension over
/// bounded subsets of the current layer. Throws BudgetExceeded when a layer
/// exceeds subset_budget() with unbounded bases.
ClosureReport mcl(const ClassSpec& spec, VertexSet a, const Graph& m, const ClosureOptions& opt = {});

/// The J_n fixpoint driven by chi. Throws MissingComparator.
ClosureReport resolve(const ClassSpec& spec, VertexSet a, const Graph& m,
                      const ChiStrategy& chi = ChiStrategy::lexicographic(), const ClosureOptions& opt = {});

/// b is strong in m and no a ⊆ b' ⊊ b is. Throws NotAResolution when b is
/// not strong, BudgetExceeded when |b \ a| > 12.
bool is_minimal_resolution(const ClassSpec& spec, VertexSet a, VertexSet b, const Graph& m);

/// Every minimal resolution of a in m with at most max_size vertices
/// (negative = no bound), by size then lexicographic.
std::vector<VertexSet> enumerate_minimal_resolutions(const ClassSpec& spec, VertexSet a, const Graph& m,
                                                     int max_size = -1);

/// The universal closedness certificate: for each base X ⊆ b no biminimal
/// extension in m lies strictly below every ≼-minimal one inside b.
/// Throws NonFinitary for classes without finitary resolutions.
bool is_closed_copy(const ClassSpec& spec, VertexSet b, const Graph& m);

/// A smallest resolution of a in m with at most max_size vertices, found
/// by iterative deepening over the fixes of the first violated biminimal
/// pair. nullopt if none fits. Throws BudgetExceeded past node_budget.
std::optional<VertexSet> minimum_resolution(const ClassSpec& spec, VertexSet a, const Graph& m, int max_size,
                                            long node_budget = 2'000'000);

}  // namespace amalgam
