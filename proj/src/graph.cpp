#include "metdim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "metdim/errors.hpp"

namespace metdim {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  GraphBuilder builder(vertex_count);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw ArgumentError("negative vertex count");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return *this;
}

Graph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  Graph g(vertex_count_);
  std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& [u, v] : edges_) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < degree.size(); ++v) g.adjacency_[v].reserve(degree[v]);
  for (const auto& [u, v] : edges_) {
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = edges_.size();
  return g;
}

std::optional<int> DistanceRow::get(Vertex v) const {
  if (!reachable(v)) return std::nullopt;
  return dist_[static_cast<std::size_t>(v)];
}

int DistanceRow::operator[](Vertex v) const {
  if (!reachable(v))
    throw UnreachableError("vertex " + std::to_string(v) + " is unreachable from " + std::to_string(source_));
  return dist_[static_cast<std::size_t>(v)];
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw ArgumentError("source vertex out of range: " + std::to_string(source));
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), DistanceRow::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.vertex_count()));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    int next = dist[static_cast<std::size_t>(u)] + 1;
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == DistanceRow::kUnreachable) {
        dw = next;
        queue.push_back(w);
      }
    }
  }
  return DistanceRow(source, std::move(dist));
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
  if (!is_connected(g)) throw DisconnectedError("distance matrix requires a connected graph");
  dist_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex v = 0; v < n_; ++v)
      dist_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = row[v];
  }
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> block{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < block.size(); ++head)
      for (Vertex w : g.neighbors(block[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          block.push_back(w);
        }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto row = bfs_distances(g, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!row.reachable(v)) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  GraphBuilder builder(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) builder.add_edge(static_cast<Vertex>(i), j);
    }
  return std::move(builder).build();
}

namespace {

long long parse_int(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed integer '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<long long> declared;
  long long max_id = -1;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      if (declared) throw ParseError(line_no, "duplicate vertex-count header");
      long long n = parse_int(tokens[1], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      declared = n;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids");
    long long u = parse_int(tokens[0], line_no);
    long long v = parse_int(tokens[1], line_no);
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (u > 50'000'000 || v > 50'000'000) throw ParseError(line_no, "vertex id too large");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  long long n = max_id + 1;
  if (declared) {
    if (*declared < n) throw ParseError(line_no, "declared vertex count " + std::to_string(*declared) + " is below max id + 1");
    n = *declared;
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace metdim
