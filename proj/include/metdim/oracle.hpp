#pragma once

#include <optional>
#include <span>
#include <vector>

#include "metdim/budget.hpp"
#include "metdim/decomposition.hpp"
#include "metdim/graph.hpp"

namespace metdim {

struct LocatingCheck {
  bool locating = false;
  std::optional<Edge> unresolved;  // (u, v) with u < v and identical distance signatures
};

/// Distance-signature test over all vertex pairs. Throws DisconnectedError on a
/// disconnected graph and ArgumentError on out-of-range landmarks.
LocatingCheck is_locating_set(const Graph& g, std::span<const Vertex> landmarks);

/// Classes of mutually twin vertices (N(u) - v == N(v) - u), size >= 2 only.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

struct BruteForceResult {
  int dimension = 0;
  std::vector<Vertex> witness;  // lexicographically smallest locating set of that size
  std::uint64_t subsets_checked = 0;
};

/// Exhaustive search over subsets by increasing size. With twin pruning, subsets that
/// leave two vertices of one twin class out are skipped (such sets never locate).
/// Throws ResourceError when the budget runs out.
BruteForceResult metric_dimension_bruteforce(const Graph& g, const Budget& budget = {}, bool twin_pruning = true);

/// All branch endpoints, the midpoint of every path branch with an interior, both
/// neighbours of the attachment on a hanging cycle, two adjacent vertices of a lone
/// cycle. At most 3b vertices.
std::vector<Vertex> canonical_locating_set(const BranchDecomposition& d);

}  // namespace metdim
