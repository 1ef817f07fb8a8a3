#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "amalgam/class_spec.hpp"
#include "amalgam/graph.hpp"

namespace amalgam {

/// Strength queries between subsets of one fixed graph m, memoized.
/// Not thread-safe; use one per thread.
class Ambient {
 public:
  /// use_fast selects spec.fast_strong when the class provides one.
  Ambient(const ClassSpec& spec, Graph m, bool use_fast = true);
  Ambient(ClassSpec&&, Graph, bool = true) = delete;  // keeps a pointer to spec

  const Graph& graph() const { return m_; }
  const ClassSpec& spec() const { return *spec_; }

  /// induced(m,a) <= induced(m,b); requires a ⊆ b.
  bool strong(VertexSet a, VertexSet b);
  bool strong_in_m(VertexSet a) { return strong(a, m_.all()); }

  bool is_minimal_pair(VertexSet x, VertexSet y);
  bool is_biminimal_pair(VertexSet x, VertexSet y);

  /// Minimal (resp. biminimal) extensions y of x with y ⊆ within and at most
  /// max_new new vertices (negative = unbounded). Sorted by size, then lex.
  std::vector<VertexSet> minimal_extensions(VertexSet x, int max_new = -1);
  std::vector<VertexSet> minimal_extensions(VertexSet x, int max_new, VertexSet within);
  std::vector<VertexSet> biminimal_extensions(VertexSet x, int max_new = -1);
  std::vector<VertexSet> biminimal_extensions(VertexSet x, int max_new, VertexSet within);

  /// The class comparator on two extensions of x inside m.
  Relation compare(VertexSet x, VertexSet y1, VertexSet y2) const;

 private:
  template <typename Pred>
  std::vector<VertexSet> extensions(VertexSet x, int max_new, VertexSet within, Pred&& keep);

  const ClassSpec* spec_;
  Graph m_;
  bool use_fast_;
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, bool>> cache_;
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, bool>> minimal_cache_;
};

/// Sorts sets by size, then lexicographically.
void sort_by_size_then_lex(std::vector<VertexSet>& sets);

/// a <= X for every X with a ⊆ X ⊆ m, using the definitional predicate.
/// Requires |m \ a| <= subset_budget().
bool is_strong_bruteforce(const ClassSpec& spec, VertexSet a, const Graph& m);

/// The existential strength test: every biminimal pair (X,Y) of `pairs`
/// with X ⊆ a, Y ⊆ m must be answered by some biminimal Y' ⊆ a over X
/// with Y' ≼ Y under `cmp`.
bool exists_strong(const ClassSpec& pairs, const Comparator& cmp, VertexSet a, const Graph& m,
                   std::optional<int> max_base, std::optional<int> max_new);

/// exists_strong with the spec's own pairs and comparator.
bool is_strong_by_biminimal(const ClassSpec& spec, VertexSet a, const Graph& m, int max_new);

// --- axioms ---------------------------------------------------------------

struct AxiomWitness {
  Graph w;
  VertexSet a, b, x;
  std::string note;
};

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::string class_name;
  int max_n = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::vector<AxiomVerdict> verdicts;

  bool all_pass() const;
  const AxiomVerdict& get(const std::string& axiom) const;
};

/// Members of the class with exactly n vertices, one per isomorphism type
/// (ordered classes: every labeling of 0 < ... < n-1).
std::vector<Graph> members_up_to_iso(const ClassSpec& spec, int n);

/// Checks substructure closure and A1-A6. Exhaustive up to 6 vertices,
/// random chains (recorded seed) above that.
AxiomReport check_axioms(const ClassSpec& spec, int max_n = 5, std::uint64_t seed = 1);

// --- minimal pairs ----------------------------------------------------------

enum class PairKind { Minimal, Biminimal };

struct MinimalPair {
  Graph x;
  Graph y;
  /// Vertices of y carrying x; induced(y, base) == x.
  VertexSet base;
  PairKind kind = PairKind::Minimal;
};

/// All biminimal extensions of x by 1..max_new vertices up to isomorphism
/// over x. In each result x sits on the first |x| vertices of y.
std::vector<MinimalPair> enumerate_biminimal_extensions(const ClassSpec& spec, const Graph& x, int max_new);
std::vector<MinimalPair> enumerate_minimal_extensions(const ClassSpec& spec, const Graph& x, int max_new);

/// Re-derives the pair's kind from the definitional predicate alone.
/// Checks every intermediate set; at most 10 new vertices.
bool verify_minimal_pair(const ClassSpec& spec, const MinimalPair& pair);

// --- amalgams -----------------------------------------------------------

/// Glues c onto b: c_to_b[i] is the b-vertex identified with c-vertex i or
/// -1. Result keeps b's numbering, appends c's remaining vertices in index
/// order. Throws AmalgamationError when b and c disagree on the shared part.
/// Orders are merged gap by gap between shared vertices: b's part first,
/// unless edges to the neighbouring shared vertices force c's part first.
Graph amalgamate(const Graph& b, const Graph& c, const PartialMap& c_to_b);

/// Free amalgam where the vertices of `a` carry the same indices in b and c.
Graph free_amalgam(VertexSet a, const Graph& b, const Graph& c);

enum class Outcome { Pass, Fail, Precondition };
const char* to_string(Outcome o);

struct AmalgamVerdict {
  Outcome outcome = Outcome::Pass;
  bool in_class = false;
  bool b_strong = false;
  bool c_strong = false;
  Graph d;
  VertexSet b_in_d, c_in_d;
  std::string detail;
};

AmalgamVerdict check_free_amalgamation(const ClassSpec& spec, VertexSet a, const Graph& b, const Graph& c);
AmalgamVerdict check_full_amalgamation(const ClassSpec& spec, VertexSet a, const Graph& b, const Graph& c);

}  // namespace amalgam
