#include <algorithm>
#include <map>

#include "metdim/errors.hpp"
#include "metdim/oracle.hpp"
#include "metdim/solver.hpp"

namespace metdim {

namespace {

using SegmentSet = std::vector<AxisSegment>;

SegmentSet intersect(const SegmentSet& x, const SegmentSet& y) {
  SegmentSet out;
  for (const auto& s : x)
    for (const auto& t : y)
      if (auto r = segments_intersect(s, t)) out.push_back(*r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class PragmaticSearch {
 public:
  PragmaticSearch(const FptInstance& inst, int k, BudgetMeter& meter, SolveStats& stats)
      : inst_(inst), ctx_(inst.context()), k_(k), meter_(meter), stats_(stats) {
    const int n = ctx_.graph().vertex_count();
    const int pairs = inst.table().pair_count();
    // families come from the cells; instantiating at the vertex's index gives its sets
    std::map<std::pair<int, int>, ParametricFamily> cache;
    families_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto [cell, index] = inst.cell_of(v);
      auto& row = families_[static_cast<std::size_t>(v)];
      for (int p = 0; p < pairs; ++p) {
        auto key = std::make_pair(cell, p);
        auto it = cache.find(key);
        if (it == cache.end())
          it = cache.emplace(key, parametric_indistinct(inst.table(), inst.cells()[static_cast<std::size_t>(cell)], p)).first;
        row.push_back(instantiate(it->second, index));
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (k_ < 1 || k_ > ctx_.graph().vertex_count()) return std::nullopt;
    std::vector<SegmentSet> none;
    if (descend(0, none)) return chosen_;
    return std::nullopt;
  }

 private:
  // Some unresolved pair has a witness point no later vertex can separate.
  bool hopeless(const std::vector<SegmentSet>& cur, Vertex last, int remaining) const {
    const int n = ctx_.graph().vertex_count();
    for (std::size_t p = 0; p < cur.size(); ++p) {
      if (cur[p].empty()) continue;
      if (remaining == 0) return true;
      const auto& pr = ctx_.pairs()[p];
      auto pts = lattice_points(cur[p].front());
      LatticePoint lp = unrotate(pts.front());
      Vertex x = ctx_.track(pr.first).vertex_at(lp.a), y = ctx_.track(pr.second).vertex_at(lp.b);
      bool separable = false;
      for (Vertex w = last + 1; w < n && !separable; ++w) separable = ctx_.distance(w, x) != ctx_.distance(w, y);
      if (!separable) return true;
    }
    return false;
  }

  bool descend(int depth, const std::vector<SegmentSet>& cur) {
    const int n = ctx_.graph().vertex_count();
    Vertex start = chosen_.empty() ? 0 : chosen_.back() + 1;
    for (Vertex v = start; v <= n - (k_ - depth); ++v) {
      if (!meter_.tick()) throw ResourceError("pragmatic search budget exhausted", k_, 0);
      ++stats_.profiles;
      const auto& fam = families_[static_cast<std::size_t>(v)];
      std::vector<SegmentSet> next;
      next.reserve(fam.size());
      for (std::size_t p = 0; p < fam.size(); ++p) next.push_back(depth == 0 ? fam[p] : intersect(cur[p], fam[p]));
      if (hopeless(next, v, k_ - depth - 1)) continue;
      chosen_.push_back(v);
      if (depth + 1 == k_ || descend(depth + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const FptInstance& inst_;
  const GeometryContext& ctx_;
  int k_;
  BudgetMeter& meter_;
  SolveStats& stats_;
  std::vector<std::vector<SegmentSet>> families_;  // [vertex][pair]
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<std::vector<Vertex>> solve_pragmatic(const FptInstance& inst, int k, BudgetMeter& meter, SolveStats& stats) {
  return PragmaticSearch(inst, k, meter, stats).run();
}

std::optional<std::vector<Vertex>> solve_pragmatic(const Graph& g, int k, const Budget& budget) {
  if (g.vertex_count() < 2) throw ArgumentError("metric dimension needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  FptInstance inst(g);
  BudgetMeter meter(budget);
  SolveStats stats;
  auto found = solve_pragmatic(inst, k, meter, stats);
  if (found && !is_locating_set(g, *found).locating) throw InternalError("fpt-pragmatic produced a set that does not locate");
  return found;
}

}  // namespace metdim
