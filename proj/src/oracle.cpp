#include "metdim/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "metdim/errors.hpp"

namespace metdim {

namespace {

std::optional<Edge> first_collision(const DistanceMatrix& dist, std::span<const Vertex> landmarks,
                                    std::vector<Vertex>& order) {
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](Vertex a, Vertex b) {
    for (Vertex s : landmarks) {
      int da = dist(s, a), db = dist(s, b);
      if (da != db) return da < db;
    }
    return a < b;
  };
  std::sort(order.begin(), order.end(), less);
  std::optional<Edge> found;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    Vertex a = order[i], b = order[i + 1];
    bool same = std::all_of(landmarks.begin(), landmarks.end(), [&](Vertex s) { return dist(s, a) == dist(s, b); });
    if (same && (!found || Edge{a, b} < *found)) found = Edge{a, b};
  }
  return found;
}

}  // namespace

LocatingCheck is_locating_set(const Graph& g, std::span<const Vertex> landmarks) {
  for (Vertex s : landmarks)
    if (!g.contains(s)) throw ArgumentError("landmark out of range: " + std::to_string(s));
  DistanceMatrix dist(g);  // throws on disconnected input
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  LocatingCheck check;
  check.unresolved = first_collision(dist, landmarks, order);
  check.locating = !check.unresolved;
  return check;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  auto twins = [&](Vertex u, Vertex v) {
    std::vector<Vertex> nu, nv;
    for (Vertex w : g.neighbors(u)) if (w != v) nu.push_back(w);
    for (Vertex w : g.neighbors(v)) if (w != u) nv.push_back(w);
    return nu == nv;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.degree(u) == g.degree(v) && twins(u, v)) parent[static_cast<std::size_t>(find(v))] = find(u);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) groups[static_cast<std::size_t>(find(v))].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& grp : groups)
    if (grp.size() >= 2) out.push_back(std::move(grp));
  return out;
}

BruteForceResult metric_dimension_bruteforce(const Graph& g, const Budget& budget, bool twin_pruning) {
  const int n = g.vertex_count();
  if (n < 2) throw ArgumentError("metric dimension search needs at least two vertices");
  DistanceMatrix dist(g);

  std::vector<int> twin_class(static_cast<std::size_t>(n), -1);
  std::vector<int> class_size;
  int min_size = 1;
  if (twin_pruning) {
    auto classes = twin_classes(g);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Vertex v : classes[c]) twin_class[static_cast<std::size_t>(v)] = static_cast<int>(c);
      class_size.push_back(static_cast<int>(classes[c].size()));
    }
    int forced = 0;
    for (int s : class_size) forced += s - 1;
    min_size = std::max(1, forced);
  }

  BruteForceResult result;
  BudgetMeter meter(budget);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::vector<int> chosen_in_class(class_size.size());

  for (int k = 1; k <= n; ++k) {
    if (k < min_size) continue;
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      // skipped subsets still cost enumeration time, so they count against the budget
      if (!meter.tick())
        throw ResourceError("brute-force budget exhausted at size " + std::to_string(k), k, n - 1);
      bool admissible = true;
      if (twin_pruning && !class_size.empty()) {
        std::fill(chosen_in_class.begin(), chosen_in_class.end(), 0);
        for (Vertex v : pick)
          if (twin_class[static_cast<std::size_t>(v)] >= 0) ++chosen_in_class[static_cast<std::size_t>(twin_class[static_cast<std::size_t>(v)])];
        for (std::size_t c = 0; c < class_size.size() && admissible; ++c)
          admissible = chosen_in_class[c] >= class_size[c] - 1;
      }
      if (admissible) {
        ++result.subsets_checked;
        if (!first_collision(dist, pick, order)) {
          result.dimension = k;
          result.witness = pick;
          return result;
        }
      }
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw InternalError("no locating set found, which is impossible for a connected graph");
}

std::vector<Vertex> canonical_locating_set(const BranchDecomposition& d) {
  std::vector<Vertex> set;
  for (const auto& b : d.branches) {
    if (!b.endpoints) {
      set.push_back(b.vertices[0]);
      set.push_back(b.vertices[1]);
      continue;
    }
    set.push_back(b.endpoints->first);
    set.push_back(b.endpoints->second);
    if (b.kind == BranchKind::Cycle) {
      // Both neighbours of the attachment. Between them they see every cycle vertex
      // closer than anything beyond the junction; one alone can tie with another cycle.
      set.push_back(b.vertices[1]);
      set.push_back(b.vertices[static_cast<std::size_t>(b.length - 1)]);
    } else if (b.length >= 2) {
      // From the midpoint the walk along the branch beats every detour through an
      // endpoint, so no outside vertex can copy an inside one. An arbitrary interior
      // vertex does not have this property.
      set.push_back(b.vertices[static_cast<std::size_t>(b.length / 2)]);
    }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace metdim
