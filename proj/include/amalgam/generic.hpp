#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/class_spec.hpp"
#include "amalgam/graph.hpp"

namespace amalgam {

/// A strong pair A ≤ B with A on vertices 0..|A|-1 of b.
struct Pattern {
  Graph a;
  Graph b;
};

/// Every strong pair with |B| <= bound, up to isomorphism over A.
/// Ordered by |B|, then |A|, then enumeration order. bound <= 5.
std::vector<Pattern> pattern_catalogue(const ClassSpec& spec, int bound);

enum class TaskStatus { Open, Satisfied };

struct Task {
  int pattern = 0;
  Embedding f;  // A into the current stage
  TaskStatus status = TaskStatus::Open;
  VertexSet witness;  // image of B once satisfied
};

struct StageRecord {
  int stage = 0;
  std::string snapshot;  // FNV-1a of the stage's graph text, hex
  int vertices = 0;
  int discovered = 0;
  int amalgams = 0;
  int open = 0;
  std::string served;  // "pattern p via {..}" or empty
};

struct StageLog {
  std::uint64_t seed = 0;
  int pattern_bound = 0;
  std::vector<StageRecord> records;
  std::string digest;

  std::string to_text() const;
};

struct BuildResult {
  Graph m;
  StageLog log;
  /// |M_t| for t = 0..stages; M_t is induced on the first sizes[t] vertices.
  std::vector<int> sizes;
  std::vector<Task> tasks;
};

struct BuildOptions {
  int stages = 0;
  int pattern_bound = 2;
  std::uint64_t seed = 1;
  int discovery_cap = 64;
  /// Check every link M_t ≤ M_{t+1} with the definitional predicate.
  bool verify_chain = true;
};

/// Fraïssé-style chain M_0 = ∅ ≤ M_1 ≤ ...: each stage serves the oldest
/// open task by a free amalgam. Throws AmalgamationError when the amalgam
/// leaves the class or breaks strength.
BuildResult build_generic(const ClassSpec& spec, const BuildOptions& opt);

struct UnmetTask {
  int pattern = 0;
  Embedding f;
};

struct InjectivityReport {
  int tasks = 0;
  int satisfied = 0;
  std::vector<UnmetTask> unmet;
};

/// For each pattern and each strong embedding of A into m with image inside
/// `within`, is there a strong extension to B? bound <= 4.
InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, int pattern_bound);
InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, int pattern_bound, VertexSet within);
InjectivityReport verify_injectivity(const ClassSpec& spec, const Graph& m, const std::vector<Pattern>& patterns,
                                     VertexSet within);

/// Every induced substructure of m with at most max_size vertices is a member.
bool verify_age(const ClassSpec& spec, const Graph& m, int max_size = 5);

}  // namespace amalgam
