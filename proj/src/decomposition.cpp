#include "metdim/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "metdim/errors.hpp"

namespace metdim {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

Branch make_cycle_branch(std::vector<Vertex> cycle, std::optional<Vertex> attachment) {
  // cycle[0] is the start; orient toward the smaller of its two cycle neighbours
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  Branch b;
  b.kind = BranchKind::Cycle;
  b.length = static_cast<int>(cycle.size());
  b.first_owned = attachment ? 1 : 0;
  b.last_owned = b.length - 1;
  if (attachment) b.endpoints = Edge{*attachment, *attachment};
  b.vertices = std::move(cycle);
  return b;
}

}  // namespace

std::string to_string(BranchKind kind) { return kind == BranchKind::Path ? "path" : "cycle"; }

BranchDecomposition compute_branches(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw ArgumentError("branch decomposition needs at least one edge");
  if (!is_connected(g))
    throw DisconnectedError("graph is disconnected; split it into connected components first");

  BranchDecomposition d;
  d.owner.assign(idx(n), kJunction);

  bool all_degree_two = true;
  for (Vertex v = 0; v < n && all_degree_two; ++v) all_degree_two = g.degree(v) == 2;

  if (all_degree_two) {
    std::vector<Vertex> cycle{0};
    Vertex prev = -1, cur = 0;
    for (int step = 1; step < n; ++step) {
      auto nb = g.neighbors(cur);
      Vertex next = (prev == -1) ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    d.branches.push_back(make_cycle_branch(std::move(cycle), std::nullopt));
  } else {
    // visited[v][i]: the edge from terminal v to its i-th neighbour has been walked
    std::vector<std::vector<bool>> visited(idx(n));
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) != 2) visited[idx(v)].assign(static_cast<std::size_t>(g.degree(v)), false);

    auto mark = [&](Vertex terminal, Vertex neighbour) {
      auto nb = g.neighbors(terminal);
      auto pos = std::lower_bound(nb.begin(), nb.end(), neighbour) - nb.begin();
      visited[idx(terminal)][static_cast<std::size_t>(pos)] = true;
    };

    for (Vertex t = 0; t < n; ++t) {
      if (g.degree(t) == 2) continue;
      auto nb = g.neighbors(t);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (visited[idx(t)][i]) continue;
        visited[idx(t)][i] = true;
        std::vector<Vertex> walk{t, nb[i]};
        Vertex prev = t, cur = nb[i];
        while (g.degree(cur) == 2) {
          auto cn = g.neighbors(cur);
          Vertex next = cn[0] == prev ? cn[1] : cn[0];
          walk.push_back(next);
          prev = cur;
          cur = next;
        }
        mark(cur, prev);
        if (cur == t) {
          walk.pop_back();
          d.branches.push_back(make_cycle_branch(std::move(walk), t));
        } else {
          if (walk.front() > walk.back()) std::reverse(walk.begin(), walk.end());
          Branch b;
          b.kind = BranchKind::Path;
          b.length = static_cast<int>(walk.size()) - 1;
          b.endpoints = Edge{walk.front(), walk.back()};
          b.first_owned = g.degree(walk.front()) == 1 ? 0 : 1;
          b.last_owned = g.degree(walk.back()) == 1 ? b.length : b.length - 1;
          b.vertices = std::move(walk);
          d.branches.push_back(std::move(b));
        }
      }
    }
  }

  std::sort(d.branches.begin(), d.branches.end(),
            [](const Branch& a, const Branch& b) { return a.vertices < b.vertices; });
  for (std::size_t i = 0; i < d.branches.size(); ++i) {
    auto& b = d.branches[i];
    b.id = static_cast<int>(i);
    for (int p = b.first_owned; p <= b.last_owned; ++p) d.owner[idx(b.vertices[static_cast<std::size_t>(p)])] = b.id;
  }
  for (Vertex v = 0; v < n; ++v)
    if (d.owner[idx(v)] == kJunction) d.junctions.push_back(v);
  return d;
}

TwoCore two_core(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(idx(n));
  std::vector<bool> gone(idx(n), false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[idx(v)] = g.degree(v);
    if (degree[idx(v)] < 2) {
      gone[idx(v)] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!gone[idx(w)] && --degree[idx(w)] < 2) {
        gone[idx(w)] = true;
        stack.push_back(w);
      }
  }
  TwoCore out;
  for (Vertex v = 0; v < n; ++v) (gone[idx(v)] ? out.removed : out.kept).push_back(v);
  out.core = induced_subgraph(g, out.kept);
  return out;
}

int QuotientGraph::index_of(Vertex host) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), host);
  return (it != vertices.end() && *it == host) ? static_cast<int>(it - vertices.begin()) : -1;
}

std::vector<long long> QuotientGraph::distances_from(int index) const {
  constexpr long long kInf = std::numeric_limits<long long>::max();
  std::vector<std::vector<std::pair<int, int>>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.from)].emplace_back(e.to, e.weight);
    adj[static_cast<std::size_t>(e.to)].emplace_back(e.from, e.weight);
  }
  std::vector<long long> dist(vertices.size(), kInf);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(index)] = 0;
  heap.emplace(0, index);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du != dist[static_cast<std::size_t>(u)]) continue;
    for (auto [w, weight] : adj[static_cast<std::size_t>(u)])
      if (du + weight < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = du + weight;
        heap.emplace(du + weight, w);
      }
  }
  return dist;
}

QuotientGraph quotient_graph(const BranchDecomposition& d) {
  QuotientGraph q;
  for (const auto& b : d.branches) {
    if (b.endpoints) {
      q.vertices.push_back(b.endpoints->first);
      q.vertices.push_back(b.endpoints->second);
    } else {
      q.vertices.push_back(b.vertices.front());
    }
  }
  std::sort(q.vertices.begin(), q.vertices.end());
  q.vertices.erase(std::unique(q.vertices.begin(), q.vertices.end()), q.vertices.end());
  for (const auto& b : d.branches) {
    Edge ends = b.endpoints.value_or(Edge{b.vertices.front(), b.vertices.front()});
    q.edges.push_back({q.index_of(ends.first), q.index_of(ends.second), b.length, b.id});
  }
  return q;
}

std::vector<Track> make_tracks(const BranchDecomposition& d) {
  std::vector<Track> tracks;
  tracks.reserve(d.branches.size() + d.junctions.size());
  for (const auto& b : d.branches) {
    Track t;
    t.kind = Track::Kind::Branch;
    t.branch = b.id;
    t.positions = b.vertices;
    t.first = b.first_owned;
    t.last = b.last_owned;
    tracks.push_back(std::move(t));
  }
  for (Vertex j : d.junctions) {
    Track t;
    t.kind = Track::Kind::Junction;
    t.junction = j;
    t.positions = {j};
    t.first = 0;
    t.last = 0;
    tracks.push_back(std::move(t));
  }
  return tracks;
}

}  // namespace metdim
