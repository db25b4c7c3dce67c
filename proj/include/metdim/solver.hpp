#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metdim/budget.hpp"
#include "metdim/geometry.hpp"
#include "metdim/stems.hpp"

namespace metdim {

enum class Mode { Faithful, Pragmatic };

struct SolveStats {
  std::uint64_t profiles = 0;
  std::uint64_t feasibility_calls = 0;
  long long elapsed_ms = 0;
};

struct SolveResult {
  int dimension = 0;
  std::vector<Vertex> witness;
  std::string engine;  // "fpt-faithful" or "fpt-pragmatic"
  SolveStats stats;
};

/// Geometry, stems and cells of one graph, shared by both engines.
class FptInstance {
 public:
  explicit FptInstance(Graph g);
  FptInstance(const FptInstance&) = delete;
  FptInstance& operator=(const FptInstance&) = delete;

  const GeometryContext& context() const { return *ctx_; }
  const IndistinctTable& table() const { return *table_; }
  const std::vector<Stem>& stems() const { return stems_; }
  const std::vector<Cell>& cells() const { return cells_; }
  /// Cell id and index within it for a vertex.
  std::pair<int, int> cell_of(Vertex v) const { return cell_of_[static_cast<std::size_t>(v)]; }
  Vertex vertex_at(int cell, int index) const;

 private:
  std::unique_ptr<GeometryContext> ctx_;
  std::unique_ptr<IndistinctTable> table_;
  std::vector<Stem> stems_;
  std::vector<Cell> cells_;
  std::vector<std::pair<int, int>> cell_of_;
};

/// Literal profile enumeration: stem assignment, orders and parities per pair, then
/// integer feasibility. Returns a placement of k landmarks that locates, or nothing.
/// Throws ResourceError(k, 0) when the meter runs out.
std::optional<std::vector<Vertex>> solve_faithful(const FptInstance& inst, int k, BudgetMeter& meter, SolveStats& stats);

/// Direct search over landmark positions, in lexicographic vertex order, pruned by the
/// running intersections of instantiated families. The first hit is the smallest set.
std::optional<std::vector<Vertex>> solve_pragmatic(const FptInstance& inst, int k, BudgetMeter& meter, SolveStats& stats);
std::optional<std::vector<Vertex>> solve_pragmatic(const Graph& g, int k, const Budget& budget = {});

/// Smallest k in 1..3b admitting a locating set. Every witness passes is_locating_set
/// (InternalError otherwise). On budget exhaustion throws ResourceError with the
/// lower bound (largest refuted k plus one) and the canonical-set upper bound.
SolveResult solve_fpt(const Graph& g, Mode mode, const Budget& budget = {});

std::string to_string(Mode mode);

}  // namespace metdim
