#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

enum class BranchKind { Path, Cycle };

/// Maximal path or cycle whose internal vertices all have degree two.
///
/// `vertices` is the canonical traversal. A path lists both endpoints and runs from
/// the smaller endpoint id. A cycle hanging off a junction starts at that junction
/// and heads toward its smaller cycle neighbour; it does not repeat the junction at
/// the end. A graph that is one cycle starts at its smallest vertex.
struct Branch {
  int id = 0;
  BranchKind kind = BranchKind::Path;
  std::optional<Edge> endpoints;  // absent only for an endpointless cycle
  std::vector<Vertex> vertices;
  int length = 0;  // edge count

  /// Inclusive range [first_owned, last_owned] of positions whose vertex belongs
  /// to this branch; empty for a single edge between two junctions.
  int first_owned = 0;
  int last_owned = -1;
  int owned_count() const { return last_owned - first_owned + 1; }
  bool owns_position(int pos) const { return pos >= first_owned && pos <= last_owned; }
};

inline constexpr int kJunction = -1;

struct BranchDecomposition {
  std::vector<Branch> branches;
  std::vector<int> owner;        // branch id per vertex, or kJunction
  std::vector<Vertex> junctions;  // sorted

  int branch_count() const { return static_cast<int>(branches.size()); }
};

/// Linear-time branch decomposition of a connected graph with at least one edge.
/// Throws DisconnectedError / ArgumentError otherwise.
BranchDecomposition compute_branches(const Graph& g);

struct TwoCore {
  Graph core;                  // relabelled 0..k-1
  std::vector<Vertex> kept;     // original id of each core vertex
  std::vector<Vertex> removed;  // original ids, sorted
};

TwoCore two_core(const Graph& g);

struct QuotientEdge {
  int from = 0;  // quotient vertex indices
  int to = 0;
  int weight = 0;
  int branch = 0;
};

/// Weighted multigraph with one edge per branch. Vertices are the branch endpoints
/// (every vertex of degree other than two) plus one representative for an
/// endpointless cycle.
struct QuotientGraph {
  std::vector<Vertex> vertices;  // host ids, sorted
  std::vector<QuotientEdge> edges;

  int index_of(Vertex host) const;  // -1 if absent
  /// Dijkstra distances from a quotient vertex.
  std::vector<long long> distances_from(int index) const;
};

QuotientGraph quotient_graph(const BranchDecomposition& d);

struct MaxLeafResult {
  int leaves = 0;
  std::vector<Edge> tree;  // witness spanning tree
};

inline constexpr int kDefaultMaxLeafGuard = 20;

/// Exact max leaf number by search; throws ResourceError above `vertex_guard`.
MaxLeafResult max_leaf_exact(const Graph& g, int vertex_guard = kDefaultMaxLeafGuard);

struct ParameterReport {
  int branches = 0;
  int max_leaf = 0;
  bool leaf_bound_holds = false;  // max_leaf <= 2 * branches
  double ratio = 0.0;             // branches / max_leaf^2
};

ParameterReport check_parameter_bounds(const Graph& g, int vertex_guard = kDefaultMaxLeafGuard);

/// A unit of vertex positions used for landmark placement and pair coverage: either
/// the owned positions of a branch, or a single junction (one position, 0).
struct Track {
  enum class Kind { Branch, Junction };
  Kind kind = Kind::Branch;
  int branch = -1;        // for Kind::Branch
  Vertex junction = -1;   // for Kind::Junction
  std::vector<Vertex> positions;  // full coordinate axis (branch vertex order, or {junction})
  int first = 0;          // owned position range
  int last = -1;

  int size() const { return last - first + 1; }
  bool empty() const { return last < first; }
  Vertex vertex_at(int pos) const { return positions[static_cast<std::size_t>(pos)]; }
};

/// Branch tracks first (index == branch id), then one track per junction.
std::vector<Track> make_tracks(const BranchDecomposition& d);

std::string to_string(BranchKind kind);

}  // namespace metdim
