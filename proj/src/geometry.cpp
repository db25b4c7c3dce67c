#include "metdim/geometry.hpp"

#include <algorithm>

#include "metdim/errors.hpp"

namespace metdim {

std::vector<LatticePoint> DiagonalSegment::points() const {
  std::vector<LatticePoint> out;
  int step = static_cast<int>(slope);
  for (int i = 0; i < point_count(); ++i) out.push_back({start.a + i, start.b + step * i});
  return out;
}

std::vector<LatticePoint> IndistinctSet::points() const {
  std::vector<LatticePoint> out;
  for (const auto& s : segments)
    for (auto p : s.points()) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t IndistinctSet::point_count() const {
  std::size_t total = 0;
  for (const auto& s : segments) total += static_cast<std::size_t>(s.point_count());
  return total;
}

GeometryContext::GeometryContext(Graph g)
    : graph_(std::move(g)),
      decomposition_(compute_branches(graph_)),
      tracks_(make_tracks(decomposition_)),
      distances_(graph_) {
  const int t = track_count();
  pair_lookup_.assign(static_cast<std::size_t>(t * t), -1);
  for (int a = 0; a < t; ++a) {
    if (track(a).empty()) continue;
    for (int b = a; b < t; ++b) {
      if (track(b).empty()) continue;
      int id = static_cast<int>(pairs_.size());
      pairs_.push_back({a, b});
      pair_lookup_[static_cast<std::size_t>(a * t + b)] = id;
      pair_lookup_[static_cast<std::size_t>(b * t + a)] = id;
    }
  }
  location_.assign(static_cast<std::size_t>(graph_.vertex_count()), {-1, -1});
  for (int id = 0; id < t; ++id) {
    const auto& tr = track(id);
    for (int p = tr.first; p <= tr.last; ++p) location_[static_cast<std::size_t>(tr.vertex_at(p))] = {id, p};
  }
}

int GeometryContext::pair_index(int first_track, int second_track) const {
  return pair_lookup_[static_cast<std::size_t>(first_track * track_count() + second_track)];
}

std::vector<MonotonePiece> monotone_partition(const GeometryContext& ctx, int track, Vertex source) {
  const auto& positions = ctx.track(track).positions;
  const int len = static_cast<int>(positions.size());
  std::vector<int> dist(positions.size());
  for (int i = 0; i < len; ++i) dist[static_cast<std::size_t>(i)] = ctx.distance(source, positions[static_cast<std::size_t>(i)]);

  std::vector<MonotonePiece> pieces;
  int i = 0;
  while (i < len) {
    MonotonePiece piece{track, i, i, Direction::Nondecreasing, source};
    int step = (i + 1 < len) ? dist[static_cast<std::size_t>(i + 1)] - dist[static_cast<std::size_t>(i)] : 0;
    if (step == 0) {
      // single position: either the left half of a plateau peak, or the tail after a turn
      if (!pieces.empty() && i == len - 1)
        piece.direction = pieces.back().direction == Direction::Nondecreasing ? Direction::Nonincreasing
                                                                              : Direction::Nondecreasing;
    } else {
      piece.direction = step > 0 ? Direction::Nondecreasing : Direction::Nonincreasing;
      while (piece.last + 1 < len &&
             dist[static_cast<std::size_t>(piece.last + 1)] - dist[static_cast<std::size_t>(piece.last)] == step)
        ++piece.last;
    }
    pieces.push_back(piece);
    i = piece.last + 1;
  }
  return pieces;
}

namespace {

struct Run {
  int first;     // owned positions only
  int last;
  int sign;      // +1 increasing distance along increasing position
  int dist_at_first;
};

std::vector<Run> owned_runs(const GeometryContext& ctx, int track, Vertex source) {
  const auto& tr = ctx.track(track);
  std::vector<Run> runs;
  for (const auto& piece : monotone_partition(ctx, track, source)) {
    int first = std::max(piece.first, tr.first);
    int last = std::min(piece.last, tr.last);
    if (first > last) continue;
    int sign = piece.direction == Direction::Nondecreasing ? 1 : -1;
    runs.push_back({first, last, sign, ctx.distance(source, tr.vertex_at(first))});
  }
  return runs;
}

}  // namespace

IndistinctSet indistinct_set(const GeometryContext& ctx, Vertex source, int first_track, int second_track) {
  IndistinctSet set;
  set.source = source;
  set.first_track = first_track;
  set.second_track = second_track;
  auto runs_a = owned_runs(ctx, first_track, source);
  auto runs_b = first_track == second_track ? runs_a : owned_runs(ctx, second_track, source);

  for (std::size_t i = 0; i < runs_a.size(); ++i) {
    for (std::size_t j = 0; j < runs_b.size(); ++j) {
      // within one strictly monotone run equal distance means equal position
      if (first_track == second_track && i == j) continue;
      const Run& ra = runs_a[i];
      const Run& rb = runs_b[j];
      auto value_range = [](const Run& r) {
        int end = r.dist_at_first + r.sign * (r.last - r.first);
        return std::pair{std::min(r.dist_at_first, end), std::max(r.dist_at_first, end)};
      };
      auto [alo, ahi] = value_range(ra);
      auto [blo, bhi] = value_range(rb);
      int lo = std::max(alo, blo), hi = std::min(ahi, bhi);
      if (lo > hi) continue;
      auto at = [](const Run& r, int value) { return r.first + (value - r.dist_at_first) * r.sign; };
      LatticePoint p{at(ra, lo), at(rb, lo)};
      LatticePoint q{at(ra, hi), at(rb, hi)};
      if (q.a < p.a) std::swap(p, q);
      set.segments.push_back({p, q, ra.sign * rb.sign > 0 ? Slope::Up : Slope::Down});
    }
  }
  std::sort(set.segments.begin(), set.segments.end(),
            [](const DiagonalSegment& x, const DiagonalSegment& y) {
              return std::tie(x.start, x.end, x.slope) < std::tie(y.start, y.end, y.slope);
            });
  return set;
}

RotatedPoint rotate(LatticePoint p) { return {p.a + p.b, p.a - p.b}; }

LatticePoint unrotate(RotatedPoint r) {
  if (((r.u - r.v) % 2) != 0)
    throw ParityError("rotated point (" + std::to_string(r.u) + ", " + std::to_string(r.v) +
                      ") has mixed parity and is not a lattice point");
  return {(r.u + r.v) / 2, (r.u - r.v) / 2};
}

AxisSegment to_axis_segment(const DiagonalSegment& s) {
  RotatedPoint p = rotate(s.start), q = rotate(s.end);
  if (s.slope == Slope::Up) return {Axis::Horizontal, p.v, std::min(p.u, q.u), std::max(p.u, q.u)};
  return {Axis::Vertical, p.u, std::min(p.v, q.v), std::max(p.v, q.v)};
}

std::vector<AxisSegment> to_axis_segments(const IndistinctSet& set) {
  std::vector<AxisSegment> out;
  out.reserve(set.segments.size());
  for (const auto& s : set.segments) out.push_back(to_axis_segment(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool same_parity(int x, int y) { return ((x - y) % 2) == 0; }

}  // namespace

std::vector<RotatedPoint> lattice_points(const AxisSegment& s) {
  std::vector<RotatedPoint> out;
  int start = same_parity(s.lo, s.fixed) ? s.lo : s.lo + 1;
  for (int x = start; x <= s.hi; x += 2)
    out.push_back(s.axis == Axis::Horizontal ? RotatedPoint{x, s.fixed} : RotatedPoint{s.fixed, x});
  return out;
}

std::optional<AxisSegment> segments_intersect(const AxisSegment& first, const AxisSegment& second) {
  if (first.axis == second.axis) {
    if (first.fixed != second.fixed) return std::nullopt;
    int lo = std::max(first.lo, second.lo), hi = std::min(first.hi, second.hi);
    if (!same_parity(lo, first.fixed)) ++lo;
    if (!same_parity(hi, first.fixed)) --hi;
    if (lo > hi) return std::nullopt;
    return AxisSegment{first.axis, first.fixed, lo, hi};
  }
  const AxisSegment& h = first.axis == Axis::Horizontal ? first : second;
  const AxisSegment& v = first.axis == Axis::Horizontal ? second : first;
  // crossing point (u, v) = (v.fixed, h.fixed)
  if (v.fixed < h.lo || v.fixed > h.hi || h.fixed < v.lo || h.fixed > v.hi) return std::nullopt;
  if (!same_parity(v.fixed, h.fixed)) return std::nullopt;
  return AxisSegment{Axis::Horizontal, h.fixed, v.fixed, v.fixed};
}

}  // namespace metdim
