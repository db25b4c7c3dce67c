#include "metdim/stems.hpp"

#include <algorithm>

#include "metdim/errors.hpp"

namespace metdim {

IndistinctTable::IndistinctTable(const GeometryContext& ctx)
    : ctx_(&ctx), pair_count_(ctx.pairs().size()) {
  const int n = ctx.graph().vertex_count();
  sets_.resize(static_cast<std::size_t>(n) * pair_count_);
  for (Vertex s = 0; s < n; ++s)
    for (std::size_t p = 0; p < pair_count_; ++p) {
      const auto& pr = ctx.pairs()[p];
      sets_[static_cast<std::size_t>(s) * pair_count_ + p] = to_axis_segments(indistinct_set(ctx, s, pr.first, pr.second));
    }
}

std::vector<Stem> compute_stems(const IndistinctTable& table) {
  const auto& ctx = table.context();
  std::vector<Stem> stems;
  for (int t = 0; t < ctx.track_count(); ++t) {
    const auto& tr = ctx.track(t);
    if (tr.kind != Track::Kind::Branch || tr.empty()) continue;
    for (int pos = tr.first; pos <= tr.last; ++pos) {
      std::vector<StructureFingerprint> structure;
      structure.reserve(static_cast<std::size_t>(table.pair_count()));
      for (int p = 0; p < table.pair_count(); ++p)
        structure.push_back(combinatorial_structure(table.at(tr.vertex_at(pos), p)));
      if (!stems.empty() && stems.back().track == t && stems.back().structure == structure) {
        stems.back().last = pos;
      } else {
        stems.push_back({t, pos, pos, std::move(structure)});
      }
    }
  }
  return stems;
}

std::vector<int> route_switch_breakpoints(const GeometryContext& ctx, int branch_track) {
  const auto& tr = ctx.track(branch_track);
  if (tr.kind != Track::Kind::Branch) return {};
  const auto& branch = ctx.decomposition().branches[static_cast<std::size_t>(tr.branch)];
  if (!branch.endpoints) return {};
  Vertex c0 = branch.endpoints->first, c1 = branch.endpoints->second;
  const int len = branch.length;

  std::vector<Vertex> targets;
  for (const auto& b : ctx.decomposition().branches)
    if (b.endpoints) {
      targets.push_back(b.endpoints->first);
      targets.push_back(b.endpoints->second);
    }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  // 0: leave through c0, 1: through c1, 2: tie
  auto routes = [&](int t) {
    std::vector<int> r;
    for (Vertex x : targets) {
      int via0 = t + ctx.distance(c0, x), via1 = (len - t) + ctx.distance(c1, x);
      r.push_back(via0 < via1 ? 0 : via0 > via1 ? 1 : 2);
    }
    return r;
  };
  std::vector<int> breaks;
  auto prev = routes(tr.first);
  for (int t = tr.first + 1; t <= tr.last; ++t) {
    auto cur = routes(t);
    if (cur != prev) breaks.push_back(t);
    prev = std::move(cur);
  }
  return breaks;
}

namespace {

// Per-coordinate differences between two segment lists of the same shape.
std::optional<std::vector<long long>> delta(const std::vector<AxisSegment>& from, const std::vector<AxisSegment>& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::vector<long long> d;
  d.reserve(from.size() * 3);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i].axis != to[i].axis) return std::nullopt;
    d.push_back(to[i].fixed - from[i].fixed);
    d.push_back(to[i].lo - from[i].lo);
    d.push_back(to[i].hi - from[i].hi);
  }
  return d;
}

// Greedy maximal affine runs along an arithmetic progression of positions.
std::vector<Cell> affine_runs(const IndistinctTable& table, int track, int stem, int start, int step, int count) {
  const auto& tr = table.context().track(track);
  const int pairs = table.pair_count();
  auto step_delta = [&](int pos) {
    std::vector<std::optional<std::vector<long long>>> out;
    for (int p = 0; p < pairs; ++p) out.push_back(delta(table.at(tr.vertex_at(pos), p), table.at(tr.vertex_at(pos + step), p)));
    return out;
  };
  auto shaped = [](const std::vector<std::optional<std::vector<long long>>>& d) {
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
  };

  std::vector<Cell> cells;
  int k = 0;
  while (k < count) {
    Cell cell{track, stem, start + step * k, step, 1};
    if (k + 1 < count) {
      auto first = step_delta(cell.start);
      if (shaped(first)) {
        cell.count = 2;
        while (k + cell.count < count && step_delta(cell.position(cell.count - 1)) == first) ++cell.count;
      }
    }
    cells.push_back(cell);
    k += cell.count;
  }
  return cells;
}

}  // namespace

std::vector<Cell> compute_cells(const IndistinctTable& table, const std::vector<Stem>& stems) {
  const auto& ctx = table.context();
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < stems.size(); ++s) {
    const auto& stem = stems[s];
    auto unit = affine_runs(table, stem.track, static_cast<int>(s), stem.first, 1, stem.size());
    std::vector<Cell> split;
    for (int parity = 0; parity < 2 && stem.size() > 1; ++parity) {
      int start = stem.first + parity;
      if (start > stem.last) continue;
      auto part = affine_runs(table, stem.track, static_cast<int>(s), start, 2, (stem.last - start) / 2 + 1);
      split.insert(split.end(), part.begin(), part.end());
    }
    auto& chosen = (!split.empty() && split.size() < unit.size()) ? split : unit;
    cells.insert(cells.end(), chosen.begin(), chosen.end());
  }
  for (int t = 0; t < ctx.track_count(); ++t)
    if (ctx.track(t).kind == Track::Kind::Junction) cells.push_back({t, -1, 0, 1, 1});
  return cells;
}

AxisSegment ParametricSegment::at(int k) const {
  return {axis, static_cast<int>(fixed.at(k)), static_cast<int>(lo.at(k)), static_cast<int>(hi.at(k))};
}

ParametricFamily parametric_indistinct(const IndistinctTable& table, const Cell& cell, int pair) {
  const auto& tr = table.context().track(cell.track);
  const auto& base = table.at(tr.vertex_at(cell.position(0)), pair);
  const std::vector<AxisSegment>* next = cell.count > 1 ? &table.at(tr.vertex_at(cell.position(1)), pair) : nullptr;
  if (next && next->size() != base.size()) throw InternalError("cell is not affine: segment count changes");

  ParametricFamily family;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const AxisSegment& b = base[i];
    ParametricSegment seg;
    seg.axis = b.axis;
    seg.fixed.offset = b.fixed;
    seg.lo.offset = b.lo;
    seg.hi.offset = b.hi;
    if (next) {
      const AxisSegment& n = (*next)[i];
      if (n.axis != b.axis) throw InternalError("cell is not affine: segment orientation changes");
      seg.fixed.coef = n.fixed - b.fixed;
      seg.lo.coef = n.lo - b.lo;
      seg.hi.coef = n.hi - b.hi;
    }
    family.push_back(seg);
  }
  for (int k = 2; k < cell.count; ++k)
    if (instantiate(family, k) != table.at(tr.vertex_at(cell.position(k)), pair))
      throw InternalError("cell is not affine at index " + std::to_string(k));
  return family;
}

std::vector<AxisSegment> instantiate(const ParametricFamily& family, int k) {
  std::vector<AxisSegment> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(s.at(k));
  return out;
}

}  // namespace metdim
