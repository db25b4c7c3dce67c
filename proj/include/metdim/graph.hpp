#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace metdim {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built: construct through from_edges() or GraphBuilder. Self-loops
/// are rejected and repeated edges collapse to one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count);
  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

/// Hop distances from one source. Vertices in other components hold no value;
/// reading one through operator[] throws instead of producing a number.
class DistanceRow {
 public:
  DistanceRow(Vertex source, std::vector<int> dist) : source_(source), dist_(std::move(dist)) {}

  Vertex source() const { return source_; }
  std::size_t size() const { return dist_.size(); }
  bool reachable(Vertex v) const { return dist_[static_cast<std::size_t>(v)] != kUnreachable; }
  std::optional<int> get(Vertex v) const;
  int operator[](Vertex v) const;

 private:
  static constexpr int kUnreachable = -1;
  friend DistanceRow bfs_distances(const Graph&, Vertex);
  Vertex source_;
  std::vector<int> dist_;
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

/// Dense all-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  int vertex_count() const { return n_; }

 private:
  int n_;
  std::vector<int> dist_;
};

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Edge-list text: optional "n <count>" header, one "u v" pair per line, '#' comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Generators. All deterministic for fixed parameters (and seed).
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph spider_graph(int legs, int leg_length);
Graph subdivided_complete_graph(int n, int subdivisions);
Graph random_connected_graph(int n, int m, std::uint64_t seed);

/// Dispatch by family name ("path", "cycle", "complete", "star", "spider",
/// "subdivided_complete", "random_connected").
Graph generate(const std::string& family, std::span<const long long> params);
/// Parse "family p1 p2 ..." (also accepts "spider 3x2").
Graph generate_from_spec(const std::string& spec);

}  // namespace metdim
