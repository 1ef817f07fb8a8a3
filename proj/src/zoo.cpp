#include "amalgam/zoo.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "amalgam/errors.hpp"
#include "amalgam/kernel.hpp"

namespace amalgam {

// --- rationals and alpha ---------------------------------------------------

AlphaParam AlphaParam::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num >= den) throw InvalidArgument("alpha must satisfy 0 < num/den < 1");
  std::int64_t g = std::gcd(num, den);
  return AlphaParam{num / g, den / g};
}

AlphaParam AlphaParam::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw InvalidArgument("alpha must be written NUM/DEN");
  try {
    std::size_t p1 = 0, p2 = 0;
    std::int64_t num = std::stoll(text.substr(0, slash), &p1);
    std::int64_t den = std::stoll(text.substr(slash + 1), &p2);
    if (p1 != slash || p2 != text.size() - slash - 1) throw InvalidArgument("trailing characters in alpha");
    return make(num, den);
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse alpha '" + text + "'");
  }
}

std::string AlphaParam::str() const { return std::to_string(num) + "/" + std::to_string(den); }

namespace {

Rational reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) num = -num, den = -den;
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

}  // namespace

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

// --- K_d ---------------------------------------------------------------

bool kd_is_strong(VertexSet a, const Graph& m) {
  const auto dm = distance_matrix(m);
  const auto da = distance_matrix(induced(m, a));
  const auto verts = a.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (da[i][j] != dm[verts[i]][verts[j]]) return false;
  return true;
}

namespace {

int shortest_by_paths(const Graph& g, int u, int v) {
  int best = kInf;
  for (const auto& p : enumerate_simple_paths(g, u, v, g.size())) best = std::min(best, static_cast<int>(p.size()) - 1);
  return best;
}

}  // namespace

bool kd_is_strong_by_paths(VertexSet a, const Graph& m) {
  const Graph ga = induced(m, a);
  const auto verts = a.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (shortest_by_paths(ga, static_cast<int>(i), static_cast<int>(j)) != shortest_by_paths(m, verts[i], verts[j]))
        return false;
  return true;
}

// --- K_C ---------------------------------------------------------------

namespace {

bool is_induced_path(const Graph& m, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (m.adjacent(p[i], p[j])) return false;
  return true;
}

}  // namespace

bool kc_is_strong_by_paths(VertexSet a, const Graph& m) {
  for (int u : a)
    for (int v : a) {
      if (v <= u || m.adjacent(u, v)) continue;
      for (const auto& p : enumerate_simple_paths(m, u, v, m.size()))
        if (is_induced_path(m, p) && !VertexSet::of(p).subset_of(a)) return false;
    }
  return true;
}

bool kc_is_strong(VertexSet a, const Graph& m) {
  if (m.size() > 16) throw BudgetExceeded("kc_is_strong limited to 16 vertices");
  const int n = m.size();
  const std::size_t masks = std::size_t{1} << n;
  // starts[mask*n+v]: vertices s with an induced s-v path on exactly mask.
  std::vector<std::uint64_t> starts(masks * n, 0);
  std::vector<std::uint64_t> spread(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v) starts[(std::size_t{1} << v) * n + v] = std::uint64_t{1} << v;
  for (std::size_t mask = 1; mask < masks; ++mask)
    for (int v = 0; v < n; ++v) {
      const std::uint64_t from = starts[mask * n + v];
      if (from == 0) continue;
      for (int s : VertexSet(from)) spread[static_cast<std::size_t>(s) * n + v] |= mask;
      for (int w : m.neighbors(v)) {
        if ((mask >> w) & 1U) continue;
        // w may touch the path only at its current end.
        if ((m.neighbors(w).bits() & mask) != (std::uint64_t{1} << v)) continue;
        starts[(mask | (std::size_t{1} << w)) * n + w] |= from;
      }
    }
  for (int u : a)
    for (int v : a) {
      if (v <= u || m.adjacent(u, v)) continue;
      if (!VertexSet(spread[static_cast<std::size_t>(u) * n + v]).subset_of(a)) return false;
    }
  return true;
}

// --- K_H ---------------------------------------------------------------

int kh_predim(const Graph& g) { return g.size() - longest_path_order(g); }

bool kh_is_strong(VertexSet a, const Graph& m) {
  if (m.size() > 12) throw BudgetExceeded("kh_is_strong limited to 12 vertices");
  const VertexSet rest = m.all() - a;
  return all_subsets(a, [&](VertexSet a0) {
    const int h0 = kh_predim(induced(m, a0));
    return all_subsets(rest, [&](VertexSet b0) {
      return b0.empty() || kh_predim(induced(m, a0 | b0)) >= h0;
    });
  });
}

bool kh_is_strong_table(VertexSet a, const Graph& m) {
  if (m.size() > 20) throw BudgetExceeded("kh_is_strong_table limited to 20 vertices");
  const auto lam = longest_path_table(m);
  auto h = [&](VertexSet s) { return s.size() - lam[s.bits()]; };
  const VertexSet rest = m.all() - a;
  return all_subsets(a, [&](VertexSet a0) {
    const int h0 = h(a0);
    return all_subsets(rest, [&](VertexSet b0) { return h(a0 | b0) >= h0; });
  });
}

// --- K_m ---------------------------------------------------------------

namespace {

int longest_by_paths(const Graph& g, int u, int v) {
  int best = -1;
  for (const auto& p : enumerate_simple_paths(g, u, v, g.size())) best = std::max(best, static_cast<int>(p.size()) - 1);
  return best;
}

}  // namespace

bool km_is_strong_by_paths(VertexSet a, const Graph& m) {
  const Graph ga = induced(m, a);
  const auto verts = a.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (longest_by_paths(m, verts[i], verts[j]) > longest_by_paths(ga, static_cast<int>(i), static_cast<int>(j)))
        return false;
  return true;
}

bool km_is_strong(VertexSet a, const Graph& m) {
  if (m.size() > 16) throw BudgetExceeded("km_is_strong limited to 16 vertices");
  const int n = m.size();
  const auto table = path_cover_table(m);
  // longest[u][v] in m and restricted to masks inside a; -1 when no path.
  std::vector<int> in_m(static_cast<std::size_t>(n) * n, -1), in_a(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const int len = std::popcount(mask) - 1;
    const bool inside = VertexSet(mask).subset_of(a);
    for (int v = 0; v < n; ++v)
      for (int u : VertexSet(table[mask * n + v])) {
        auto idx = static_cast<std::size_t>(u) * n + v;
        in_m[idx] = std::max(in_m[idx], len);
        if (inside) in_a[idx] = std::max(in_a[idx], len);
      }
  }
  for (int u : a)
    for (int v : a)
      if (u < v && in_m[static_cast<std::size_t>(u) * n + v] > in_a[static_cast<std::size_t>(u) * n + v]) return false;
  return true;
}

// --- K_p ---------------------------------------------------------------

bool kp_membership(const Graph& g) {
  if (!g.has_order()) return false;
  for (auto [u, v] : g.edges())
    if (std::abs(g.rank(u) - g.rank(v)) != 1) return false;
  return true;
}

namespace {

void require_order(const Graph& m) {
  if (!m.has_order()) throw InvalidArgument("path classes need an ordered graph");
}

}  // namespace

bool kp_forall_strong(VertexSet a, const Graph& m) {
  require_order(m);
  for (VertexSet c : components(m))
    if (c.intersects(a) && !c.subset_of(a)) return false;
  return true;
}

bool kp_forall_strong_by_neighbours(VertexSet a, const Graph& m) {
  require_order(m);
  for (int v : a)
    if (!m.neighbors(v).subset_of(a)) return false;
  return true;
}

bool kp_exists_strong(KpVariant variant, VertexSet a, const Graph& m) {
  require_order(m);
  for (int v : a) {
    auto p = m.predecessor(v);
    auto s = m.successor(v);
    const bool p_edge = p && m.adjacent(v, *p);
    const bool s_edge = s && m.adjacent(v, *s);
    const bool p_out = p_edge && !a.contains(*p);
    const bool s_out = s_edge && !a.contains(*s);
    const bool p_in = p_edge && a.contains(*p);
    const bool s_in = s_edge && a.contains(*s);
    switch (variant) {
      case KpVariant::Lt:
        if (p_out || (s_out && !p_in)) return false;
        break;
      case KpVariant::Gt:
        if (s_out || (p_out && !s_in)) return false;
        break;
      case KpVariant::Eq:
        if ((p_out || s_out) && !p_in && !s_in) return false;
        break;
    }
  }
  return true;
}

// --- K_alpha -----------------------------------------------------------

Rational kalpha_predim(const Graph& g, VertexSet a, VertexSet b0, AlphaParam alpha) {
  if (!a.subset_of(b0)) throw InvalidArgument("predimension needs a ⊆ b0");
  const std::int64_t nodes = (b0 - a).size();
  const std::int64_t edges = g.edge_count(b0) - g.edge_count(a);
  return reduce(alpha.den * nodes - alpha.num * edges, alpha.den);
}

bool kalpha_is_strong(VertexSet a, const Graph& m, AlphaParam alpha) {
  const VertexSet rest = m.all() - a;
  if (rest.size() > subset_budget()) throw BudgetExceeded("kalpha_is_strong: too many free vertices");
  return all_subsets(rest, [&](VertexSet extra) {
    if (extra.empty()) return true;
    Rational r = kalpha_predim(m, a, a | extra, alpha);
    if (r.num == 0)
      throw ExactZeroError("predimension is exactly 0 over " + std::to_string(extra.size()) +
                           " new vertices; alpha " + alpha.str() + " behaves rationally here");
    return r.num > 0;
  });
}

bool kalpha_membership(const Graph& g, AlphaParam alpha) { return kalpha_is_strong({}, g, alpha); }

DnObstruction kalpha_dn_obstruction(const Graph& y, VertexSet x_in_y, AlphaParam alpha, int max_n) {
  ClassSpec spec = make_kalpha(alpha);
  if (!spec.membership(y)) throw InvalidArgument("y is not in K_alpha");
  Ambient amb(spec, y);
  if (!amb.is_biminimal_pair(x_in_y, y.all())) throw InvalidArgument("pair is not biminimal for K_alpha");

  // X on vertices 0..k-1, then one block of fresh vertices per copy of Y.
  const auto xs = x_in_y.to_vector();
  const auto news = (y.all() - x_in_y).to_vector();
  std::vector<int> local(y.size(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) local[xs[i]] = static_cast<int>(i);
  DnObstruction d;
  d.vertices = static_cast<int>(xs.size());
  for (auto [u, v] : y.edges())
    if (x_in_y.contains(u) && x_in_y.contains(v)) d.edges.emplace_back(local[u], local[v]);
  for (int n = 1; n <= max_n; ++n) {
    for (std::size_t i = 0; i < news.size(); ++i) local[news[i]] = d.vertices + static_cast<int>(i);
    d.vertices += static_cast<int>(news.size());
    for (auto [u, v] : y.edges())
      if (!x_in_y.contains(u) || !x_in_y.contains(v)) d.edges.emplace_back(local[u], local[v]);
    d.n = n;
    const std::int64_t edges = static_cast<std::int64_t>(d.edges.size());
    d.predim = reduce(alpha.den * d.vertices - alpha.num * edges, alpha.den);
    if (d.predim.num == 0)
      throw ExactZeroError("D_" + std::to_string(n) + " has predimension exactly 0 for alpha " + alpha.str());
    if (d.predim.num < 0) return d;
  }
  throw BudgetExceeded("no negative D_n up to n = " + std::to_string(max_n));
}

// --- registry ----------------------------------------------------------

namespace {

// Extension y of a singleton base x: +1 when the new vertex follows x.
int side_of(const ExtRef& e) {
  if (e.x.size() != 1 || (e.y - e.x).size() != 1) return 0;
  const int x = e.x.first();
  const int z = (e.y - e.x).first();
  return e.g->rank(z) < e.g->rank(x) ? -1 : 1;
}

Relation compare_ints(int lhs, int rhs) {
  if (lhs < rhs) return Relation::Less;
  if (lhs > rhs) return Relation::Greater;
  return Relation::Equiv;
}

}  // namespace

ClassSpec make_kd() {
  ClassSpec s;
  s.name = "kd";
  s.summary = "all finite graphs; strong = distance preserving";
  s.membership = [](const Graph& g) { return !g.has_order(); };
  s.strong = kd_is_strong_by_paths;
  s.fast_strong = kd_is_strong;
  // Shorter geodesic first.
  s.bimin_compare = [](const ExtRef& a, const ExtRef& b) { return compare_ints(a.y.size(), b.y.size()); };
  s.finitary = true;
  s.max_base = 2;
  return s;
}

ClassSpec make_kc() {
  ClassSpec s;
  s.name = "kc";
  s.summary = "all finite graphs; strong = every induced path between non-adjacent base vertices stays inside";
  s.membership = [](const Graph& g) { return !g.has_order(); };
  s.strong = kc_is_strong_by_paths;
  s.fast_strong = kc_is_strong;
  s.max_base = 2;
  return s;
}

ClassSpec make_kh() {
  ClassSpec s;
  s.name = "kh";
  s.summary = "all finite graphs; strong = H(A0B0/A0) >= 0 with H = |A| - longest path order";
  s.membership = [](const Graph& g) { return !g.has_order(); };
  s.strong = kh_is_strong;
  s.fast_strong = kh_is_strong_table;
  s.max_base = 2;
  return s;
}

ClassSpec make_km() {
  ClassSpec s;
  s.name = "km";
  s.summary = "all finite graphs; strong = longest paths between base vertices do not grow";
  s.membership = [](const Graph& g) { return !g.has_order(); };
  s.strong = km_is_strong_by_paths;
  s.fast_strong = km_is_strong;
  // Longer path preferred.
  s.bimin_compare = [](const ExtRef& a, const ExtRef& b) { return compare_ints(b.y.size(), a.y.size()); };
  s.finitary = false;
  s.max_base = 2;
  return s;
}

ClassSpec make_kp_forall() {
  ClassSpec s;
  s.name = "kp-forall";
  s.summary = "ordered graphs with successor edges; strong = closed under components";
  s.membership = kp_membership;
  s.strong = kp_forall_strong;
  s.fast_strong = kp_forall_strong_by_neighbours;
  s.requires_order = true;
  s.max_base = 1;
  s.max_new = 1;
  return s;
}

ClassSpec make_kp_exists(KpVariant variant) {
  auto pairs = std::make_shared<const ClassSpec>(make_kp_forall());
  ClassSpec s;
  switch (variant) {
    case KpVariant::Lt:
      s.name = "kp-lt";
      s.summary = "path class companion; the predecessor extension is preferred";
      s.bimin_compare = [](const ExtRef& a, const ExtRef& b) {
        int sa = side_of(a), sb = side_of(b);
        if (sa == 0 || sb == 0) return a.y == b.y ? Relation::Equiv : Relation::Incomparable;
        return compare_ints(sa, sb);
      };
      break;
    case KpVariant::Gt:
      s.name = "kp-gt";
      s.summary = "path class companion; the successor extension is preferred";
      s.bimin_compare = [](const ExtRef& a, const ExtRef& b) {
        int sa = side_of(a), sb = side_of(b);
        if (sa == 0 || sb == 0) return a.y == b.y ? Relation::Equiv : Relation::Incomparable;
        return compare_ints(sb, sa);
      };
      break;
    case KpVariant::Eq:
      s.name = "kp-eq";
      s.summary = "path class companion; both extensions equivalent";
      s.bimin_compare = [](const ExtRef& a, const ExtRef& b) {
        int sa = side_of(a), sb = side_of(b);
        if (sa == 0 || sb == 0) return a.y == b.y ? Relation::Equiv : Relation::Incomparable;
        return Relation::Equiv;
      };
      break;
  }
  s.membership = kp_membership;
  s.max_base = 1;
  s.max_new = 1;
  s.strong = [pairs, cmp = s.bimin_compare](VertexSet a, const Graph& m) {
    return exists_strong(*pairs, cmp, a, m, pairs->max_base, pairs->max_new);
  };
  s.fast_strong = [variant](VertexSet a, const Graph& m) { return kp_exists_strong(variant, a, m); };
  s.requires_order = true;
  s.finitary = true;
  return s;
}

ClassSpec make_kalpha(AlphaParam alpha) {
  alpha = AlphaParam::make(alpha.num, alpha.den);
  ClassSpec s;
  s.name = "kalpha";
  s.summary = "graphs with positive predimension, alpha = " + alpha.str();
  s.membership = [alpha](const Graph& g) { return !g.has_order() && kalpha_membership(g, alpha); };
  s.strong = [alpha](VertexSet a, const Graph& m) { return kalpha_is_strong(a, m, alpha); };
  return s;
}

ClassSpec make_kh_allpaths() {
  auto pairs = std::make_shared<const ClassSpec>(make_kh());
  ClassSpec s;
  s.name = "kh-allpaths";
  s.summary = "existential companion of kh with every path between a pair equivalent";
  s.membership = [](const Graph& g) { return !g.has_order(); };
  s.bimin_compare = [](const ExtRef&, const ExtRef&) { return Relation::Equiv; };
  s.strong = [pairs, cmp = s.bimin_compare](VertexSet a, const Graph& m) {
    return exists_strong(*pairs, cmp, a, m, pairs->max_base, std::nullopt);
  };
  // Non-adjacent pairs connected in m must already be connected inside a.
  s.fast_strong = [](VertexSet a, const Graph& m) {
    const Graph ga = induced(m, a);
    const auto verts = a.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (m.adjacent(verts[i], verts[j])) continue;
        if (component_of(m, verts[i]).contains(verts[j]) && !component_of(ga, static_cast<int>(i)).contains(static_cast<int>(j)))
          return false;
      }
    return true;
  };
  s.finitary = false;
  s.max_base = 2;
  return s;
}

std::vector<std::string> class_names() {
  return {"kd", "kc", "kh", "km", "kp-forall", "kp-lt", "kp-gt", "kp-eq", "kalpha", "kh-allpaths"};
}

ClassSpec make_class(const std::string& name, AlphaParam alpha) {
  if (name == "kd") return make_kd();
  if (name == "kc") return make_kc();
  if (name == "kh") return make_kh();
  if (name == "km") return make_km();
  if (name == "kp-forall") return make_kp_forall();
  if (name == "kp-lt") return make_kp_exists(KpVariant::Lt);
  if (name == "kp-gt") return make_kp_exists(KpVariant::Gt);
  if (name == "kp-eq") return make_kp_exists(KpVariant::Eq);
  if (name == "kalpha") return make_kalpha(alpha);
  if (name == "kh-allpaths") return make_kh_allpaths();
  throw InvalidArgument("unknown class '" + name + "'");
}

}  // namespace amalgam
