#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "metdim/errors.hpp"
#include "metdim/graph.hpp"

namespace metdim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

// Portable bounded draw; std::uniform_int_distribution differs between libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

// Center 0; leg j occupies 1 + j*len .. (j+1)*len, listed outward.
Graph spider_graph(int legs, int leg_length) {
  require(legs >= 1 && leg_length >= 1, "spider needs legs >= 1 and leg length >= 1");
  GraphBuilder b(1 + legs * leg_length);
  for (int j = 0; j < legs; ++j) {
    Vertex prev = 0;
    for (int i = 0; i < leg_length; ++i) {
      Vertex cur = 1 + j * leg_length + i;
      b.add_edge(prev, cur);
      prev = cur;
    }
  }
  return std::move(b).build();
}

Graph subdivided_complete_graph(int n, int subdivisions) {
  require(n >= 2 && subdivisions >= 0, "subdivided_complete needs n >= 2 and t >= 0");
  int total = n + n * (n - 1) / 2 * subdivisions;
  GraphBuilder b(total);
  Vertex next = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Vertex prev = u;
      for (int i = 0; i < subdivisions; ++i) {
        b.add_edge(prev, next);
        prev = next++;
      }
      b.add_edge(prev, v);
    }
  return std::move(b).build();
}

// Random labelled tree by uniform attachment, topped up with uniformly drawn extra
// edges. Connected by construction, so no retry loop is needed.
Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  require(n >= 1, "random_connected needs n >= 1");
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  require(m >= n - 1 && m <= max_edges, "random_connected needs n-1 <= m <= n(n-1)/2");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw_below(rng, i)]);

  std::set<Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex u = order[i];
    Vertex w = order[draw_below(rng, i)];
    edges.emplace(std::min(u, w), std::max(u, w));
  }
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!edges.count({u, v})) missing.emplace_back(u, v);
  for (long long extra = m - (n - 1); extra > 0; --extra) {
    auto pick = draw_below(rng, missing.size());
    edges.insert(missing[pick]);
    missing[pick] = missing.back();
    missing.pop_back();
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

Graph generate(const std::string& family, std::span<const long long> params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw ArgumentError(family + " expects " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
  };
  auto as_int = [](long long x) {
    if (x < 0 || x > 10'000'000) throw ArgumentError("parameter out of range: " + std::to_string(x));
    return static_cast<int>(x);
  };
  if (family == "path") return arity(1), path_graph(as_int(params[0]));
  if (family == "cycle") return arity(1), cycle_graph(as_int(params[0]));
  if (family == "complete") return arity(1), complete_graph(as_int(params[0]));
  if (family == "star") return arity(1), star_graph(as_int(params[0]));
  if (family == "spider") return arity(2), spider_graph(as_int(params[0]), as_int(params[1]));
  if (family == "subdivided_complete") return arity(2), subdivided_complete_graph(as_int(params[0]), as_int(params[1]));
  if (family == "random_connected") {
    arity(3);
    if (params[2] < 0) throw ArgumentError("seed must be non-negative");
    return random_connected_graph(as_int(params[0]), as_int(params[1]), static_cast<std::uint64_t>(params[2]));
  }
  throw ArgumentError("unknown graph family '" + family + "'");
}

Graph generate_from_spec(const std::string& spec) {
  // "spider 3x2" and "spider 3,2" are accepted; no family name contains 'x'.
  std::string normalized = spec;
  std::replace(normalized.begin(), normalized.end(), 'x', ' ');
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::replace(normalized.begin(), normalized.end(), ':', ' ');
  std::istringstream in(normalized);
  std::string family;
  if (!(in >> family)) throw ArgumentError("empty generator spec");
  std::vector<long long> params;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw ArgumentError("bad generator parameter '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ArgumentError("bad generator parameter '" + tok + "'");
    }
  }
  return generate(family, params);
}

}  // namespace metdim
