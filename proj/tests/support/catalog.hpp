#pragma once
// Test-only graph corpora: every graph up to isomorphism on few vertices, and random
// graphs with few branches.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "metdim/decomposition.hpp"
#include "metdim/graph.hpp"

namespace metdim::testing {

// Adjacency as one bitmask row per vertex; n <= 11 keeps the code in 64 bits.
using Rows = std::vector<std::uint32_t>;

namespace detail {

using Partition = std::vector<std::vector<int>>;

inline Partition refine(const Rows& rows, Partition p) {
  for (bool changed = true; changed;) {
    changed = false;
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      // split by neighbour counts in every cell; order of pieces is label-free
      std::vector<std::pair<std::vector<int>, int>> sig;
      for (int v : cell) {
        std::vector<int> counts;
        for (const auto& c : p) {
          int k = 0;
          for (int w : c) k += (rows[static_cast<std::size_t>(v)] >> w) & 1;
          counts.push_back(k);
        }
        sig.push_back({counts, v});
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = next.size();
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) next.push_back({});
        next.back().push_back(sig[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    p = std::move(next);
  }
  return p;
}

inline void search(const Rows& rows, const Partition& p, std::uint64_t& best) {
  auto it = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
  if (it == p.end()) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> order;
    for (const auto& c : p) order.push_back(c.front());
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        code = (code << 1) | ((rows[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1);
    best = std::min(best, code);
    return;
  }
  auto idx = static_cast<std::size_t>(it - p.begin());
  for (int v : p[idx]) {
    Partition q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(idx));
    q.push_back({v});
    std::vector<int> rest;
    for (int w : p[idx])
      if (w != v) rest.push_back(w);
    q.push_back(rest);
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(idx) + 1, p.end());
    search(rows, refine(rows, q), best);
  }
}

}  // namespace detail

/// Isomorphism-invariant code of a small graph (individualization and refinement).
inline std::uint64_t canonical_code(const Rows& rows) {
  std::vector<int> all(rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::uint64_t best = ~std::uint64_t{0};
  detail::search(rows, detail::refine(rows, {all}), best);
  return best;
}

inline Graph to_graph(const Rows& rows) {
  GraphBuilder b(static_cast<int>(rows.size()));
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = u + 1; v < rows.size(); ++v)
      if ((rows[u] >> v) & 1) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

inline bool rows_connected(const Rows& rows) {
  if (rows.empty()) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < rows.size(); ++v)
      if ((frontier >> v) & 1) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << rows.size()) - 1;
}

/// All graphs on n vertices up to isomorphism, grown one vertex at a time.
inline std::vector<Rows> all_graphs(int n) {
  std::vector<Rows> level{Rows{}};
  for (int k = 1; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<Rows> next;
    for (const auto& g : level)
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
        Rows h = g;
        h.push_back(mask);
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1) h[static_cast<std::size_t>(v)] |= std::uint32_t{1} << (k - 1);
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& r : all_graphs(n))
    if (rows_connected(r)) out.push_back(to_graph(r));
  return out;
}

/// Random connected graph with at most `max_branches` branches and 2..max_n vertices:
/// a small multigraph skeleton whose edges are subdivided.
inline Graph random_low_branch_graph(std::mt19937_64& rng, int max_n, int max_branches) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    const int skeleton = pick(1, 4);
    const int edges = pick(1, max_branches);
    std::vector<std::pair<int, int>> sk;
    int extra = skeleton;  // pendant leaves get fresh skeleton ids
    for (int e = 0; e < edges; ++e) {
      int u = pick(0, skeleton - 1);
      int kind = pick(0, 2);
      if (kind == 0) sk.push_back({u, extra++});  // pendant path
      else sk.push_back({u, pick(0, skeleton - 1)});
    }
    int n = extra;
    std::vector<int> lengths;
    for (auto [u, v] : sk) lengths.push_back(u == v ? 3 : 1);
    int budget = max_n - n;
    for (std::size_t i = 0; i < sk.size(); ++i) budget -= lengths[i] - 1;
    if (budget < 0) continue;
    int grow = pick(0, budget);
    for (int i = 0; i < grow; ++i) ++lengths[static_cast<std::size_t>(pick(0, static_cast<int>(sk.size()) - 1))];

    std::vector<Edge> out;
    for (std::size_t i = 0; i < sk.size(); ++i) {
      Vertex prev = sk[i].first;
      for (int step = 1; step < lengths[i]; ++step) {
        out.push_back({prev, n});
        prev = n++;
      }
      out.push_back({prev, sk[i].second});
    }
    if (n < 2 || n > max_n) continue;
    GraphBuilder b(n);
    bool simple = true;
    std::set<Edge> dedupe;
    for (auto [u, v] : out) {
      if (u == v || !dedupe.insert({std::min(u, v), std::max(u, v)}).second) simple = false;
      else b.add_edge(u, v);
    }
    if (!simple) continue;
    Graph g = std::move(b).build();
    if (!is_connected(g)) continue;
    if (compute_branches(g).branch_count() > max_branches) continue;
    return g;
  }
}

}  // namespace metdim::testing
