#include <algorithm>

#include "doctest.h"
#include "amalgam/closure.hpp"
#include "amalgam/enumerate.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/kernel.hpp"
#include "amalgam/zoo.hpp"
#include "support.hpp"

using namespace amalgam;
using namespace testkit;

namespace {

// Instances for a class: unordered members up to iso, or all K_p-shaped
// ordered graphs.
template <typename Fn>
void for_each_instance(const ClassSpec& spec, int n, Fn&& fn) {
  if (spec.requires_order) {
    for_each_kp_graph(n, [&](const Graph& g) {
      if (spec.membership(g)) fn(g);
    });
  } else {
    for (const Graph& g : members_up_to_iso(spec, n)) fn(g);
  }
}

}  // namespace

TEST_CASE("mcl on the 4-cycle in K_d takes every vertex") {
  auto kd = make_kd();
  Graph c4 = cycle_graph(4);
  auto rep = mcl(kd, {0, 2}, c4);
  CHECK(rep.result == c4.all());
  CHECK(rep.verified_strong);
  CHECK(rep.layers.front() == c4.all());
  CHECK(rep.mode == ClosureMode::Mcl);
}

TEST_CASE("closures of strong sets are trivial") {
  auto kd = make_kd();
  Graph p4 = path_graph(4);
  VertexSet a{0, 1, 2};
  CHECK(mcl(kd, a, p4).result == a);
  CHECK(resolve(kd, a, p4).result == a);
  CHECK(is_minimal_resolution(kd, a, a, p4));
  CHECK(enumerate_minimal_resolutions(kd, a, p4) == std::vector<VertexSet>{a});
}

TEST_CASE("mcl in K_p-forall grows a vertex to its component") {
  auto kp = make_kp_forall();
  Graph g = ordered_path(3);
  CHECK(mcl(kp, {0}, g).result == g.all());
  Graph h = ordered_path(5);
  h.remove_edge(2, 3);
  CHECK(mcl(kp, {1}, h).result == VertexSet{0, 1, 2});
  auto rep = mcl(kp, {0}, ordered_path(5));
  CHECK(rep.layers.size() == 4);
  CHECK(rep.layers.front() == VertexSet{0, 1});
}

TEST_CASE("resolve on the 4-cycle picks one geodesic") {
  auto kd = make_kd();
  Graph c4 = cycle_graph(4);
  CHECK(resolve(kd, {0, 2}, c4).result == VertexSet{0, 1, 2});
  CHECK(resolve(kd, {0, 2}, c4, ChiStrategy::reverse_lexicographic()).result == VertexSet{0, 2, 3});
  CHECK_THROWS_AS(resolve(make_kc(), {0, 2}, c4), MissingComparator);
}

TEST_CASE("resolve in the LT companion follows the left ray") {
  auto lt = make_kp_exists(KpVariant::Lt);
  Graph g = ordered_path(7);
  auto rep = resolve(lt, {3}, g);
  CHECK(rep.result == VertexSet{0, 1, 2, 3});
  CHECK(rep.verified_strong);
  CHECK(is_strong_bruteforce(lt, rep.result, g));
}

TEST_CASE("minimal resolutions of the 4-cycle") {
  auto kd = make_kd();
  Graph c4 = cycle_graph(4);
  CHECK(is_minimal_resolution(kd, {0, 2}, {0, 1, 2}, c4));
  CHECK_FALSE(is_minimal_resolution(kd, {0, 2}, c4.all(), c4));
  CHECK_THROWS_AS(is_minimal_resolution(kd, {0, 2}, {0, 2}, c4), NotAResolution);
  auto all = enumerate_minimal_resolutions(kd, {0, 2}, c4);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == VertexSet{0, 1, 2});
  CHECK(all[1] == VertexSet{0, 2, 3});
  CHECK(enumerate_minimal_resolutions(kd, {0, 2}, c4, 2).empty());
}

TEST_CASE("closed-copy certificate examples") {
  auto kd = make_kd();
  Graph c4 = cycle_graph(4);
  CHECK(is_closed_copy(kd, {0, 1, 2}, c4));
  CHECK(is_closed_copy(kd, c4.all(), c4));
  // Pentagon 0-1-2-4-3-0: b holds the long way round from 0 to 2.
  Graph c5(5);
  c5.add_edge(0, 1);
  c5.add_edge(1, 2);
  c5.add_edge(2, 4);
  c5.add_edge(4, 3);
  c5.add_edge(3, 0);
  CHECK_FALSE(is_closed_copy(kd, {0, 2, 3, 4}, c5));
  CHECK_THROWS_AS(is_closed_copy(make_km(), {0}, c4), NonFinitary);
  CHECK_THROWS_AS(is_closed_copy(make_kh(), {0}, c4), NonFinitary);
}

TEST_CASE("resolve stays inside mcl and is strong") {
  for (const char* name : {"kd", "kp-lt", "kp-gt", "kp-eq"}) {
    auto spec = make_class(name);
    for (int n = 1; n <= 5; ++n) {
      for_each_instance(spec, n, [&](const Graph& m) {
        for_each_subset(m.all(), [&](VertexSet a) {
          auto r = resolve(spec, a, m);
          auto c = mcl(spec, a, m);
          CHECK(r.result.subset_of(c.result));
          CHECK(a.subset_of(r.result));
          CHECK(is_strong_bruteforce(spec, r.result, m));
          CHECK(is_strong_bruteforce(spec, c.result, m));
          for (std::size_t i = 1; i < r.layers.size(); ++i) CHECK(r.layers[i - 1].proper_subset_of(r.layers[i]));
          CHECK(r.layers.back() == r.result);
        });
      });
    }
  }
}

TEST_CASE("A6 classes have a unique minimal resolution equal to mcl") {
  for (const char* name : {"kh", "kc", "kp-forall"}) {
    auto spec = make_class(name);
    for (int n = 1; n <= 5; ++n) {
      for_each_instance(spec, n, [&](const Graph& m) {
        for_each_subset(m.all(), [&](VertexSet a) {
          auto res = enumerate_minimal_resolutions(spec, a, m);
          INFO(std::string(name) << " n=" << n << " a=" << format_set(a) << "\n" << to_text(m));
          REQUIRE(res.size() == 1);
          CHECK(res[0] == mcl(spec, a, m).result);
        });
      });
    }
  }
}

TEST_CASE("bounded bases give the same maximal closure as all bases") {
  for (const char* name : {"kd", "kc", "kh", "km", "kp-forall"}) {
    auto spec = make_class(name);
    ClosureOptions all_bases;
    all_bases.mcl_max_base = -1;
    for (int n = 1; n <= 5; ++n) {
      for_each_instance(spec, n, [&](const Graph& m) {
        for_each_subset(m.all(), [&](VertexSet a) { CHECK(mcl(spec, a, m).result == mcl(spec, a, m, all_bases).result); });
      });
    }
  }
}

TEST_CASE("every enumerated minimal resolution is a strong, minimal superset") {
  auto kd = make_kd();
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& m : members_up_to_iso(kd, n)) {
      for_each_subset(m.all(), [&](VertexSet a) {
        for (VertexSet b : enumerate_minimal_resolutions(kd, a, m)) {
          CHECK(is_strong_bruteforce(kd, b, m));
          CHECK(is_minimal_resolution(kd, a, b, m));
        }
      });
    }
  }
}

TEST_CASE("closed-copy certificate matches the strong relation") {
  for (const char* name : {"kd", "kp-lt", "kp-gt", "kp-eq"}) {
    auto spec = make_class(name);
    for (int n = 1; n <= 5; ++n) {
      for_each_instance(spec, n, [&](const Graph& m) {
        for_each_subset(m.all(), [&](VertexSet b) {
          INFO(std::string(name) << " n=" << n << " b=" << b.bits());
          CHECK(is_closed_copy(spec, b, m) == is_strong_bruteforce(spec, b, m));
        });
      });
    }
  }
}

TEST_CASE("minimum resolution agrees with exhaustive enumeration") {
  for (const char* name : {"kd", "kp-lt", "kh"}) {
    auto spec = make_class(name);
    for (int n = 1; n <= 5; ++n) {
      for_each_instance(spec, n, [&](const Graph& m) {
        for_each_subset(m.all(), [&](VertexSet a) {
          auto all = enumerate_minimal_resolutions(spec, a, m);
          REQUIRE_FALSE(all.empty());
          auto best = minimum_resolution(spec, a, m, m.size());
          REQUIRE(best.has_value());
          CHECK(best->size() == all.front().size());
          CHECK(is_strong_bruteforce(spec, *best, m));
          if (all.front().size() > a.size()) CHECK_FALSE(minimum_resolution(spec, a, m, all.front().size() - 1));
        });
      });
    }
  }
}

TEST_CASE("boundary flag") {
  auto kd = make_kd();
  Graph c4 = cycle_graph(4);
  ClosureOptions opt;
  opt.boundary = VertexSet{3};
  CHECK(mcl(kd, {0, 2}, c4, opt).touches_boundary);
  CHECK_FALSE(resolve(kd, {0, 2}, c4, ChiStrategy::lexicographic(), opt).touches_boundary);
}
