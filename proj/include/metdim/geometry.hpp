#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "metdim/decomposition.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Branch-position coordinates: (position in track A, position in track B).
struct LatticePoint {
  int a = 0;
  int b = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

enum class Slope : int { Down = -1, Up = 1 };

/// Lattice points on a slope +-1 line between two endpoints, inclusive. `start.a <= end.a`.
struct DiagonalSegment {
  LatticePoint start;
  LatticePoint end;
  Slope slope = Slope::Up;

  bool degenerate() const { return start == end; }
  int point_count() const { return end.a - start.a + 1; }
  std::vector<LatticePoint> points() const;
  bool operator==(const DiagonalSegment&) const = default;
};

/// Pairs (a, b) of distinct vertices, a on track A and b on track B, that landmark
/// `source` cannot tell apart.
struct IndistinctSet {
  Vertex source = 0;
  int first_track = 0;
  int second_track = 0;
  std::vector<DiagonalSegment> segments;

  std::vector<LatticePoint> points() const;  // sorted
  std::size_t point_count() const;
};

enum class Direction { Nondecreasing, Nonincreasing };

/// Maximal run of positions along a track on which distance from `source` is strictly
/// monotone (a step of zero always starts a new piece).
struct MonotonePiece {
  int track = 0;
  int first = 0;
  int last = 0;
  Direction direction = Direction::Nondecreasing;
  Vertex source = 0;
};

struct TrackPair {
  int first = 0;
  int second = 0;
  bool operator==(const TrackPair&) const = default;
};

/// A connected graph together with its branch decomposition, tracks and distances.
class GeometryContext {
 public:
  explicit GeometryContext(Graph g);

  const Graph& graph() const { return graph_; }
  const BranchDecomposition& decomposition() const { return decomposition_; }
  const std::vector<Track>& tracks() const { return tracks_; }
  const Track& track(int id) const { return tracks_[static_cast<std::size_t>(id)]; }
  int track_count() const { return static_cast<int>(tracks_.size()); }
  const DistanceMatrix& distances() const { return distances_; }
  int distance(Vertex u, Vertex v) const { return distances_(u, v); }

  /// Unordered pairs (A <= B) of non-empty tracks; together they cover every vertex pair.
  const std::vector<TrackPair>& pairs() const { return pairs_; }
  int pair_index(int first_track, int second_track) const;

  /// Track and position holding vertex v.
  std::pair<int, int> locate(Vertex v) const { return location_[static_cast<std::size_t>(v)]; }

 private:
  Graph graph_;
  BranchDecomposition decomposition_;
  std::vector<Track> tracks_;
  DistanceMatrix distances_;
  std::vector<TrackPair> pairs_;
  std::vector<int> pair_lookup_;
  std::vector<std::pair<int, int>> location_;
};

/// Splits the whole coordinate axis of `track` (junction endpoints included) into
/// strictly monotone pieces of distance from `source`.
std::vector<MonotonePiece> monotone_partition(const GeometryContext& ctx, int track, Vertex source);

IndistinctSet indistinct_set(const GeometryContext& ctx, Vertex source, int first_track, int second_track);

// ---------------------------------------------------------------------------
// Rotated coordinates: u = a + b, v = a - b. Slope +1 diagonals become horizontal
// (v fixed), slope -1 diagonals vertical (u fixed). A rotated point is an image of a
// lattice point iff u and v have the same parity.

struct RotatedPoint {
  int u = 0;
  int v = 0;
  auto operator<=>(const RotatedPoint&) const = default;
};

RotatedPoint rotate(LatticePoint p);
/// Throws ParityError when u and v differ in parity.
LatticePoint unrotate(RotatedPoint r);

enum class Axis { Horizontal, Vertical };

/// Axis-parallel rotated segment: `fixed` is v (horizontal) or u (vertical), and the
/// other coordinate spans [lo, hi]. Only the parity-valid points belong to it.
struct AxisSegment {
  Axis axis = Axis::Horizontal;
  int fixed = 0;
  int lo = 0;
  int hi = 0;

  bool degenerate() const { return lo == hi; }
  RotatedPoint low_end() const { return axis == Axis::Horizontal ? RotatedPoint{lo, fixed} : RotatedPoint{fixed, lo}; }
  RotatedPoint high_end() const { return axis == Axis::Horizontal ? RotatedPoint{hi, fixed} : RotatedPoint{fixed, hi}; }
  auto operator<=>(const AxisSegment&) const = default;
};

AxisSegment to_axis_segment(const DiagonalSegment& s);
std::vector<AxisSegment> to_axis_segments(const IndistinctSet& set);

/// Parity-valid points of a rotated segment, in increasing order.
std::vector<RotatedPoint> lattice_points(const AxisSegment& s);

/// Common parity-valid points of two rotated segments, as a (possibly degenerate)
/// segment, or nothing. Crossings that land on a half-integer point are empty.
std::optional<AxisSegment> segments_intersect(const AxisSegment& first, const AxisSegment& second);

// ---------------------------------------------------------------------------
// Combinatorial structure.

/// Canonical code of a segment arrangement up to combinatorial equivalence: a
/// bijection preserving slopes, the (continuous) intersection relation, and the order
/// of intersections along each segment.
struct StructureFingerprint {
  std::vector<int> code;
  bool operator==(const StructureFingerprint&) const = default;
  auto operator<=>(const StructureFingerprint&) const = default;
};

StructureFingerprint combinatorial_structure(const std::vector<AxisSegment>& segments);
StructureFingerprint combinatorial_structure(const IndistinctSet& set);
inline bool structures_equal(const StructureFingerprint& x, const StructureFingerprint& y) { return x == y; }

/// JSON dump used by the CLI inspection command.
std::string indistinct_set_json(const IndistinctSet& set);

}  // namespace metdim
