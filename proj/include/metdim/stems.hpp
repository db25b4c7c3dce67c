#pragma once

#include <vector>

#include "metdim/geometry.hpp"

namespace metdim {

/// Rotated indistinct-set segments for every (landmark vertex, track pair), sorted.
class IndistinctTable {
 public:
  explicit IndistinctTable(const GeometryContext& ctx);

  const GeometryContext& context() const { return *ctx_; }
  const std::vector<AxisSegment>& at(Vertex landmark, int pair) const {
    return sets_[static_cast<std::size_t>(landmark) * pair_count_ + static_cast<std::size_t>(pair)];
  }
  int pair_count() const { return static_cast<int>(pair_count_); }

 private:
  const GeometryContext* ctx_;
  std::size_t pair_count_;
  std::vector<std::vector<AxisSegment>> sets_;
};

/// Maximal run of owned positions on a branch within which the combinatorial structure
/// of every track pair's indistinct set stays the same.
struct Stem {
  int track = 0;
  int first = 0;
  int last = 0;
  std::vector<StructureFingerprint> structure;  // one per track pair

  int size() const { return last - first + 1; }
};

std::vector<Stem> compute_stems(const IndistinctTable& table);

/// Positions on a branch where the shorter route from the moving landmark to some
/// branch endpoint switches from one end of the branch to the other.
std::vector<int> route_switch_breakpoints(const GeometryContext& ctx, int branch_track);

/// Landmark positions start, start + step, ..., forming part of one stem (or a junction),
/// on which every pair's segments move affinely with the index k.
struct Cell {
  int track = 0;
  int stem = -1;  // -1 for a junction cell
  int start = 0;
  int step = 1;
  int count = 1;

  int position(int k) const { return start + step * k; }
};

/// Refines each stem into affine cells and appends one cell per junction.
std::vector<Cell> compute_cells(const IndistinctTable& table, const std::vector<Stem>& stems);

struct AffineValue {
  long long offset = 0;
  long long coef = 0;
  long long at(long long k) const { return offset + coef * k; }
  bool operator==(const AffineValue&) const = default;
};

/// Rotated segment whose coordinates are affine in the cell index k.
struct ParametricSegment {
  Axis axis = Axis::Horizontal;
  AffineValue fixed;
  AffineValue lo;
  AffineValue hi;

  AffineValue u_low() const { return axis == Axis::Horizontal ? lo : fixed; }
  AffineValue u_high() const { return axis == Axis::Horizontal ? hi : fixed; }
  AffineValue v_low() const { return axis == Axis::Horizontal ? fixed : lo; }
  AffineValue v_high() const { return axis == Axis::Horizontal ? fixed : hi; }
  AxisSegment at(int k) const;
};

using ParametricFamily = std::vector<ParametricSegment>;

/// Family for a landmark ranging over `cell`; instantiating it at k reproduces the
/// indistinct set of the landmark at cell.position(k).
ParametricFamily parametric_indistinct(const IndistinctTable& table, const Cell& cell, int pair);

std::vector<AxisSegment> instantiate(const ParametricFamily& family, int k);

}  // namespace metdim
