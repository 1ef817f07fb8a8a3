#pragma once

#include <optional>
#include <string>

#include "amalgam/class_spec.hpp"
#include "amalgam/graph.hpp"
#include "amalgam/kernel.hpp"

namespace amalgam {

/// The ∀-companion: same membership, A ≤' B iff every minimal pair (X, Y)
/// of `spec` with X ⊆ A and Y ⊆ B has Y ⊆ A. No comparator. Evaluation is
/// memoized per labeled (graph, A) and throws BudgetExceeded for |B| > 12.
ClassSpec derive_forall(const ClassSpec& spec);

struct CoincideVerdict {
  Outcome outcome = Outcome::Pass;
  /// Distinguishing instance: (x, all of y). For a membership mismatch x is
  /// empty and y is the structure in only one class.
  std::optional<Graph> y;
  VertexSet x;
  bool first = false;   // biminimal (or member) in the first class
  bool second = false;  // ... in the second
  std::string detail;
};

/// Do the two classes agree on membership and on which (X, Y) are biminimal
/// pairs, for |Y| <= max_total (<= 6)? jobs > 1 splits the structures over
/// threads; the reported counterexample is the first in enumeration order.
CoincideVerdict biminimal_coincide(const ClassSpec& first, const ClassSpec& second, int max_total, int jobs = 1);

/// biminimal_coincide(base, derive_forall(companion), bound). Reports
/// Precondition when check_axioms(base, 4) finds A6 failing.
CoincideVerdict roundtrip_check(const ClassSpec& base, const ClassSpec& companion, int bound, int jobs = 1);

struct FreeAmalgWitness {
  Graph a, b, c, d;  // a on 0..|a|-1 in b and c; d keeps b's numbering
  VertexSet b_in_d, c_in_d;
  std::string reason;
};

/// First triple, by |A| then |B|+|C| then enumeration order, whose free
/// amalgam leaves the class or fails to contain B or C strongly.
/// Bounds at most (5, 2).
std::optional<FreeAmalgWitness> find_free_amalg_counterexample(const ClassSpec& spec, int max_a, int max_ext);

}  // namespace amalgam
