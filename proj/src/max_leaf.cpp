#include <algorithm>
#include <bit>
#include <cstdint>

#include "metdim/decomposition.hpp"
#include "metdim/errors.hpp"

namespace metdim {

namespace {

using Mask = std::uint64_t;

bool connected_within(Mask set, const std::vector<Mask>& open) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  for (Mask frontier = reached; frontier;) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= open[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

// Visits k-subsets of {0..n-1} in lexicographic order until `accept` returns true.
template <typename Accept>
bool for_each_subset(int n, int k, Accept&& accept) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int v : pick) m |= Mask{1} << v;
    if (accept(m)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

// A spanning tree with leaf set L exists iff V \ L is a connected dominating set
// (n >= 3), so the max leaf number is n minus the minimum connected dominating set.
// Sizes are tried in increasing order; the first hit is optimal.
MaxLeafResult max_leaf_exact(const Graph& g, int vertex_guard) {
  const int n = g.vertex_count();
  if (n < 2) throw ArgumentError("max leaf number needs at least two vertices");
  if (n > vertex_guard || n > 63)
    throw ResourceError("graph has " + std::to_string(n) + " vertices, above the exact max-leaf guard of " +
                            std::to_string(vertex_guard) + "; use the branch-count bound instead",
                        0, 0);
  if (!is_connected(g)) throw DisconnectedError("max leaf number needs a connected graph");

  MaxLeafResult result;
  if (n == 2) {
    result.leaves = 2;
    result.tree = {{0, 1}};
    return result;
  }

  std::vector<Mask> open(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) open[static_cast<std::size_t>(v)] |= Mask{1} << w;
  const Mask all = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;

  Mask core = 0;
  for (int k = 1; k <= n && core == 0; ++k) {
    for_each_subset(n, k, [&](Mask set) {
      Mask dominated = set;
      for (Mask s = set; s; s &= s - 1) dominated |= open[static_cast<std::size_t>(std::countr_zero(s))];
      if (dominated != all || !connected_within(set, open)) return false;
      core = set;
      return true;
    });
  }

  // BFS tree over the core, then hang every other vertex off its smallest core neighbour.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  auto add = [&](Vertex u, Vertex v) {
    result.tree.emplace_back(std::min(u, v), std::max(u, v));
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  };
  Vertex root = std::countr_zero(core);
  Mask reached = Mask{1} << root;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if ((core >> w & 1) && !(reached >> w & 1)) {
        reached |= Mask{1} << w;
        add(queue[head], w);
        queue.push_back(w);
      }
  for (Vertex v = 0; v < n; ++v) {
    if (core >> v & 1) continue;
    Mask attach = open[static_cast<std::size_t>(v)] & core;
    add(std::countr_zero(attach), v);
  }
  std::sort(result.tree.begin(), result.tree.end());
  for (int deg : degree) result.leaves += (deg == 1);
  if (result.leaves != n - std::popcount(core))
    throw InternalError("max leaf witness has an unexpected leaf count");
  return result;
}

ParameterReport check_parameter_bounds(const Graph& g, int vertex_guard) {
  ParameterReport report;
  report.branches = compute_branches(g).branch_count();
  report.max_leaf = max_leaf_exact(g, vertex_guard).leaves;
  report.leaf_bound_holds = report.max_leaf <= 2 * report.branches;
  report.ratio = static_cast<double>(report.branches) / (static_cast<double>(report.max_leaf) * report.max_leaf);
  return report;
}

}  // namespace metdim
