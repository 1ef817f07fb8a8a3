#include "doctest.h"
#include "amalgam/errors.hpp"
#include "amalgam/kernel.hpp"
#include "amalgam/zoo.hpp"
#include "support.hpp"

using namespace amalgam;
using namespace testkit;

namespace {

Graph edge_graph() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

// Ordered path on n vertices with the vertex of rank r being vertex r.
Graph opath(int n) { return ordered_path(n); }

}  // namespace

TEST_CASE("kd strong examples") {
  CHECK(kd_is_strong(VertexSet{0, 1}, edge_graph()));
  CHECK_FALSE(kd_is_strong(VertexSet{0, 2}, cycle_graph(4)));
  CHECK(kd_is_strong(VertexSet{0, 1, 2}, cycle_graph(6)));
  CHECK(kd_is_strong(VertexSet{3}, cycle_graph(5)));
  // Disconnected ambient: unreachable pairs compare equal.
  CHECK(kd_is_strong(VertexSet{0, 1}, Graph(3)));
}

TEST_CASE("kc strong examples") {
  CHECK(kc_is_strong(cycle_graph(4).all(), cycle_graph(4)));
  CHECK_FALSE(kc_is_strong(VertexSet{0, 2}, cycle_graph(4)));
  Graph g(4);
  g.add_edge(2, 3);
  CHECK(kc_is_strong(VertexSet{0, 1}, g));
  // Adjacent endpoints impose nothing.
  CHECK(kc_is_strong(VertexSet{0, 1}, complete_graph(3)));
}

TEST_CASE("kh predimension and strength") {
  CHECK(kh_predim(path_graph(4)) == 0);
  CHECK(kh_predim(star_graph(3)) == 1);
  Graph m = path_graph(3);  // x=0, midpoint 1, y=2
  CHECK_FALSE(kh_is_strong(VertexSet{0, 2}, m));
  CHECK_FALSE(kh_is_strong_table(VertexSet{0, 2}, m));
  CHECK(kh_is_strong(VertexSet{0, 1}, m));
  CHECK_THROWS_AS(kh_is_strong(VertexSet{0}, Graph(13)), BudgetExceeded);
}

TEST_CASE("km strong examples") {
  Graph m = path_graph(3);  // 0-1-2
  CHECK(km_is_strong(m.all(), m));
  // Detour 0-3-4-2 of length 3 added to the P3 between 0 and 2.
  Graph d(5);
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(0, 3);
  d.add_edge(3, 4);
  d.add_edge(4, 2);
  CHECK_FALSE(km_is_strong(VertexSet{0, 1, 2}, d));
  CHECK_FALSE(km_is_strong_by_paths(VertexSet{0, 1, 2}, d));
  CHECK(km_is_strong(VertexSet{1}, d));
}

TEST_CASE("kp membership and strength") {
  Graph iso = Graph::ordered(4);
  CHECK(kp_membership(iso));
  for_each_subset(iso.all(), [&](VertexSet a) { CHECK(kp_forall_strong(a, iso)); });
  Graph bad = Graph::ordered(3);
  bad.add_edge(0, 2);
  CHECK_FALSE(kp_membership(bad));
  CHECK_FALSE(kp_membership(path_graph(3)));

  Graph p = opath(3);  // x-1 = 0, x = 1, x+1 = 2
  CHECK_FALSE(kp_forall_strong(VertexSet{1}, p));
  CHECK_FALSE(kp_exists_strong(KpVariant::Lt, VertexSet{1}, p));
  CHECK(kp_exists_strong(KpVariant::Lt, VertexSet{0, 1}, p));
  CHECK_FALSE(kp_exists_strong(KpVariant::Gt, VertexSet{0, 1}, p));
  CHECK(kp_exists_strong(KpVariant::Gt, VertexSet{1, 2}, p));
  CHECK(kp_exists_strong(KpVariant::Eq, VertexSet{1, 2}, p));
  CHECK(kp_exists_strong(KpVariant::Eq, VertexSet{0, 1}, p));
  CHECK_FALSE(kp_exists_strong(KpVariant::Eq, VertexSet{1}, p));
  CHECK_THROWS_AS(kp_forall_strong(VertexSet{0}, path_graph(2)), InvalidArgument);
}

TEST_CASE("kalpha predimension") {
  AlphaParam alpha = AlphaParam::parse("618/1000");
  CHECK(alpha.num == 309);
  CHECK(alpha.den == 500);
  CHECK(kalpha_membership(Graph(4), alpha));
  CHECK(kalpha_membership(Graph(0), alpha));
  Graph y = path_graph(3);  // X = {0,2}, common neighbour 1
  Rational r = kalpha_predim(y, VertexSet{0, 2}, y.all(), alpha);
  CHECK(r == Rational{-59, 250});  // (500 - 618) / 500 reduced
  CHECK(r.sign() < 0);
  CHECK_FALSE(kalpha_is_strong(VertexSet{0, 2}, y, alpha));
  CHECK(kalpha_is_strong(y.all(), y, alpha));
  CHECK_THROWS_AS(AlphaParam::parse("3/2"), InvalidArgument);
  CHECK_THROWS_AS(AlphaParam::parse("x/2"), InvalidArgument);
  // alpha = 1/2 puts a common neighbour of two points at exactly zero.
  CHECK_THROWS_AS(kalpha_is_strong(VertexSet{0, 2}, y, AlphaParam::make(1, 2)), ExactZeroError);
}

namespace {

// n with 2 + n(1 - 2 alpha) < 0 first, in integers: n*(2num - den) > 2den.
int closed_form_dn(AlphaParam a) {
  const std::int64_t step = 2 * a.num - a.den;
  return static_cast<int>(2 * a.den / step + 1);
}

}  // namespace

TEST_CASE("kalpha D_n obstruction matches the closed form") {
  Graph y = path_graph(3);
  for (auto text : {"618/1000", "9/10", "4/5", "53/100", "13/20", "503/1000"}) {
    AlphaParam a = AlphaParam::parse(text);
    auto d = kalpha_dn_obstruction(y, VertexSet{0, 2}, a);
    CHECK(d.n == closed_form_dn(a));
    CHECK(d.vertices == 2 + d.n);
    CHECK(static_cast<int>(d.edges.size()) == 2 * d.n);
    CHECK(d.predim.sign() < 0);
  }
  CHECK(kalpha_dn_obstruction(y, VertexSet{0, 2}, AlphaParam::parse("618/1000")).n == 9);
  // 2/(2 alpha - 1) is an integer for these, so some D_n sits exactly on 0.
  CHECK_THROWS_AS(kalpha_dn_obstruction(y, VertexSet{0, 2}, AlphaParam::parse("3/4")), ExactZeroError);
  CHECK_THROWS_AS(kalpha_dn_obstruction(y, VertexSet{0, 2}, AlphaParam::parse("51/100")), ExactZeroError);
  // Not biminimal: adjacent base.
  CHECK_THROWS_AS(kalpha_dn_obstruction(y, VertexSet{0, 1}, AlphaParam::parse("618/1000")), InvalidArgument);
}

TEST_CASE("fast predicates agree with brute force on small graphs") {
  for (const std::string name : {"kd", "kc", "kh", "km", "kh-allpaths"}) {
    ClassSpec spec = make_class(name);
    CAPTURE(name);
    for (int n = 0; n <= 5; ++n)
      for (const auto& m : members_up_to_iso(spec, n))
        for_each_subset(m.all(), [&](VertexSet a) {
          CHECK(spec.fast_strong(a, m) == is_strong_bruteforce(spec, a, m));
        });
  }
  for (const std::string name : {"kp-forall", "kp-lt", "kp-gt", "kp-eq"}) {
    ClassSpec spec = make_class(name);
    CAPTURE(name);
    for (int n = 0; n <= 5; ++n)
      for (const auto& m : members_up_to_iso(spec, n))
        for_each_subset(m.all(), [&](VertexSet a) {
          CHECK(spec.fast_strong(a, m) == is_strong_bruteforce(spec, a, m));
        });
  }
}

TEST_CASE("registry") {
  for (const auto& name : class_names()) CHECK(make_class(name).name == name);
  CHECK_THROWS_AS(make_class("nope"), InvalidArgument);
  CHECK(make_class("kalpha", AlphaParam::make(2, 3)).summary.find("2/3") != std::string::npos);
}
