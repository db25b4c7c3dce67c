#include "metdim/solver.hpp"

#include "metdim/errors.hpp"
#include "metdim/oracle.hpp"

namespace metdim {

FptInstance::FptInstance(Graph g) : ctx_(std::make_unique<GeometryContext>(std::move(g))) {
  table_ = std::make_unique<IndistinctTable>(*ctx_);
  stems_ = compute_stems(*table_);
  cells_ = compute_cells(*table_, stems_);
  cell_of_.assign(static_cast<std::size_t>(ctx_->graph().vertex_count()), {-1, -1});
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto& cell = cells_[c];
    const auto& tr = ctx_->track(cell.track);
    for (int k = 0; k < cell.count; ++k) cell_of_[static_cast<std::size_t>(tr.vertex_at(cell.position(k)))] = {static_cast<int>(c), k};
  }
  for (const auto& loc : cell_of_)
    if (loc.first < 0) throw InternalError("cells do not cover every vertex");
}

Vertex FptInstance::vertex_at(int cell, int index) const {
  const auto& c = cells_.at(static_cast<std::size_t>(cell));
  return ctx_->track(c.track).vertex_at(c.position(index));
}

std::string to_string(Mode mode) { return mode == Mode::Faithful ? "fpt-faithful" : "fpt-pragmatic"; }

SolveResult solve_fpt(const Graph& g, Mode mode, const Budget& budget) {
  if (g.vertex_count() < 2) throw ArgumentError("metric dimension needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  BudgetMeter meter(budget);
  FptInstance inst(g);
  const int b = static_cast<int>(inst.context().decomposition().branches.size());
  const int upper = static_cast<int>(canonical_locating_set(inst.context().decomposition()).size());

  SolveResult result;
  result.engine = to_string(mode);
  for (int k = 1; k <= 3 * b; ++k) {
    std::optional<std::vector<Vertex>> found;
    try {
      found = mode == Mode::Faithful ? solve_faithful(inst, k, meter, result.stats) : solve_pragmatic(inst, k, meter, result.stats);
    } catch (const ResourceError&) {
      throw ResourceError(to_string(mode) + " budget exhausted while testing size " + std::to_string(k), k, upper);
    }
    if (!found) continue;
    auto check = is_locating_set(g, *found);
    if (!check.locating || static_cast<int>(found->size()) != k)
      throw InternalError(to_string(mode) + " produced a set that does not locate");
    result.dimension = k;
    result.witness = std::move(*found);
    result.stats.elapsed_ms = meter.elapsed().count();
    return result;
  }
  throw InternalError("no locating set of size at most 3b found");
}

}  // namespace metdim
