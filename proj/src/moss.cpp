#include "amalgam/moss.hpp"

#include <iomanip>
#include <sstream>

#include "amalgam/closure.hpp"
#include "amalgam/enumerate.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/kernel.hpp"

namespace amalgam {

VertexSet Truncation::interior() const {
  const int n = g.size();
  if (n <= 2 * margin) return {};
  return VertexSet::range(n - margin) - VertexSet::range(margin);
}

std::optional<std::pair<int, int>> Truncation::path_position(int v) const {
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& path = paths[p];
    if (v >= path.front() && v <= path.back()) return std::pair{static_cast<int>(p), v - path.front()};
  }
  return std::nullopt;
}

Truncation build_truncation(int num_paths, int path_len, int filler, int margin) {
  if (num_paths <= 0 || path_len <= 0 || filler < 0 || margin < 0)
    throw InvalidArgument("truncation needs positive path count and length, non-negative filler and margin");
  const int n = num_paths * (path_len + 1) + filler;
  if (n > kMaxVertices) throw InvalidArgument("truncation exceeds 64 vertices");
  Truncation t;
  t.num_paths = num_paths;
  t.path_len = path_len;
  t.filler = filler;
  t.margin = margin;
  t.g = Graph::ordered(n);
  const int gaps = num_paths + 1;
  int next = 0;
  auto place_filler = [&](int gap) {
    const int count = filler / gaps + (gap < filler % gaps ? 1 : 0);
    for (int i = 0; i < count; ++i) t.filler_vertices.push_back(next++);
  };
  for (int p = 0; p < num_paths; ++p) {
    place_filler(p);
    std::vector<int> path;
    for (int i = 0; i <= path_len; ++i) {
      path.push_back(next);
      if (i > 0) t.g.add_edge(next - 1, next);
      ++next;
    }
    t.paths.push_back(std::move(path));
  }
  place_filler(num_paths);
  return t;
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const ClassSpec& spec, int length, int max_new, long budget)
      : spec_(spec), length_(length), max_new_(max_new), budget_(budget) {}

  std::optional<std::vector<Graph>> run() {
    for (int n = 0; n <= 2; ++n)
      for (const Graph& start : members_up_to_iso(spec_, n)) {
        chain_ = {start};
        if (extend()) return chain_;
      }
    return std::nullopt;
  }

 private:
  bool extend() {
    if (static_cast<int>(chain_.size()) == length_ + 1) return true;
    const Graph x = chain_.back();
    const VertexSet base = VertexSet::range(x.size());
    for (int j = 1; j <= max_new_; ++j) {
      std::vector<Graph> candidates;
      try {
        candidates = extensions_up_to_iso(x, j);
      } catch (const BudgetExceeded&) {
        return false;
      }
      for (Graph& y : candidates) {
        if (++nodes_ > budget_) return false;
        if (!spec_.membership(y)) continue;
        Ambient amb(spec_, y);
        if (!amb.is_minimal_pair(base, y.all())) continue;
        chain_.push_back(std::move(y));
        if (extend()) return true;
        chain_.pop_back();
      }
    }
    return false;
  }

  const ClassSpec& spec_;
  int length_;
  int max_new_;
  long budget_;
  long nodes_ = 0;
  std::vector<Graph> chain_;
};

}  // namespace

std::optional<std::vector<Graph>> find_minimal_pair_chain(const ClassSpec& spec, int length, int max_new,
                                                          long node_budget) {
  if (length < 0 || length > 20) throw InvalidArgument("chain length must lie in 0..20");
  return ChainSearch(spec, length, max_new, node_budget).run();
}

std::vector<GrowthRow> closure_growth(const ClassSpec& spec, int x, const Truncation& t, const std::vector<int>& radii) {
  const int n = t.g.size();
  if (x < 0 || x >= n) throw InvalidArgument("vertex outside truncation");
  const auto pos = t.path_position(x);
  for (int r : radii) {
    if (r < 0 || r > t.margin) throw InvalidArgument("radius " + std::to_string(r) + " exceeds margin");
    if (pos && (pos->second - r < 0 || pos->second + r > t.path_len))
      throw InvalidArgument("vertex " + std::to_string(x) + " is not interior at radius " + std::to_string(r));
  }
  std::vector<GrowthRow> rows;
  for (int r : radii) {
    const int lo = std::max(0, x - r), hi = std::min(n - 1, x + r);
    const VertexSet window = VertexSet::range(hi + 1) - VertexSet::range(lo);
    const Graph m = induced(t.g, window);
    GrowthRow row;
    row.radius = r;
    row.window = window.size();
    if (auto best = minimum_resolution(spec, VertexSet::single(x - lo), m, m.size())) {
      row.size = best->size();
      row.resolution = lift_from(*best, window);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string growth_table_text(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << std::setw(6) << "radius" << std::setw(8) << "window" << std::setw(12) << "min-res" << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << r.radius << std::setw(8) << r.window << std::setw(12)
       << (r.size ? std::to_string(*r.size) : "UNBOUNDED") << '\n';
  }
  return os.str();
}

std::string growth_table_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "radius,window,min_resolution\n";
  for (const auto& r : rows) os << r.radius << ',' << r.window << ',' << (r.size ? std::to_string(*r.size) : "UNBOUNDED") << '\n';
  return os.str();
}

InjectivityReport injectivity_suite(const ClassSpec& spec, const Truncation& t, int bound) {
  if (bound < 0 || bound > 3) throw InvalidArgument("injectivity bound must lie in 0..3");
  if (bound == 0) return {};
  return verify_injectivity(spec, t.g, bound, t.interior());
}

}  // namespace amalgam
