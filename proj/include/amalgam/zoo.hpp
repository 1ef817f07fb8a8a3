#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/class_spec.hpp"
#include "amalgam/graph.hpp"

namespace amalgam {

/// Exact rational in (0,1) standing in for an irrational alpha.
struct AlphaParam {
  std::int64_t num = 618;
  std::int64_t den = 1000;

  /// "NUM/DEN"; reduces the fraction and rejects values outside (0,1).
  static AlphaParam parse(const std::string& text);
  static AlphaParam make(std::int64_t num, std::int64_t den);
  std::string str() const;
};

/// Exact rational value; den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  int sign() const { return (num > 0) - (num < 0); }
  friend bool operator==(const Rational&, const Rational&) = default;
};
std::string to_string(const Rational& r);

// --- the individual predicates ------------------------------------------

/// Distance preservation (BFS).
bool kd_is_strong(VertexSet a, const Graph& m);
/// Distance preservation computed from enumerated simple paths.
bool kd_is_strong_by_paths(VertexSet a, const Graph& m);

/// For non-adjacent a, a' in a, every induced (chordless) a-a' path of m stays in a.
bool kc_is_strong(VertexSet a, const Graph& m);
bool kc_is_strong_by_paths(VertexSet a, const Graph& m);

/// H(A) = |A| - lambda(A).
int kh_predim(const Graph& g);
/// Quantifies over every A0 ⊆ a and B0 ⊆ m \ a, one longest-path search
/// each; |m| <= 12.
bool kh_is_strong(VertexSet a, const Graph& m);
/// Same relation from the subset table; |m| <= 20.
bool kh_is_strong_table(VertexSet a, const Graph& m);

/// Longest a-a' paths of m are no longer than those inside a.
bool km_is_strong(VertexSet a, const Graph& m);
bool km_is_strong_by_paths(VertexSet a, const Graph& m);

/// Ordered graph whose edges join order-successors only.
bool kp_membership(const Graph& g);
/// Components of m meeting a lie inside a.
bool kp_forall_strong(VertexSet a, const Graph& m);
bool kp_forall_strong_by_neighbours(VertexSet a, const Graph& m);

enum class KpVariant { Lt, Gt, Eq };
/// The three existential companions, by the explicit neighbour rule.
bool kp_exists_strong(KpVariant variant, VertexSet a, const Graph& m);

/// |B0 \ a| - alpha * e(B0 / a) for a ⊆ b0 ⊆ g.
Rational kalpha_predim(const Graph& g, VertexSet a, VertexSet b0, AlphaParam alpha);
/// Strict positivity over every a ⊊ B0 ⊆ m. Throws ExactZeroError on 0.
bool kalpha_is_strong(VertexSet a, const Graph& m, AlphaParam alpha);
bool kalpha_membership(const Graph& g, AlphaParam alpha);

/// Free amalgam of X with n copies of Y, kept as an edge list because it
/// can outgrow the 64-vertex Graph.
struct DnObstruction {
  int n = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  Rational predim;
};

/// Builds D_1, D_2, ... over the biminimal pair (x_in_y, y) and returns the
/// first D_n with negative total predimension. Throws InvalidArgument when
/// the pair is not biminimal, ExactZeroError when some D_n lands on 0.
DnObstruction kalpha_dn_obstruction(const Graph& y, VertexSet x_in_y, AlphaParam alpha, int max_n = 100000);

// --- registry ----------------------------------------------------------------

ClassSpec make_kd();
ClassSpec make_kc();
ClassSpec make_kh();
ClassSpec make_km();
ClassSpec make_kp_forall();
ClassSpec make_kp_exists(KpVariant variant);
ClassSpec make_kalpha(AlphaParam alpha = {});
/// Existential companion of K_H treating all paths between a pair as equal.
ClassSpec make_kh_allpaths();

/// kd kc kh km kp-forall kp-lt kp-gt kp-eq kalpha kh-allpaths
std::vector<std::string> class_names();
ClassSpec make_class(const std::string& name, AlphaParam alpha = {});

}  // namespace amalgam
