#include "metdim/json_io.hpp"

#include "metdim/errors.hpp"

namespace metdim {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 0) throw ArgumentError("negative vertex count");
    GraphBuilder builder(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ArgumentError("edge must be a pair");
      builder.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return std::move(builder).build();
  } catch (const json::exception& ex) {
    throw ArgumentError(std::string("malformed graph JSON: ") + ex.what());
  }
}

json parameter_report_json(const ParameterReport& r) {
  return {{"b", r.branches}, {"ell", r.max_leaf}, {"ell_le_2b", r.leaf_bound_holds}, {"ratio_b_over_ell_sq", r.ratio}};
}

json decomposition_json(const Graph& g, const BranchDecomposition& d) {
  json branches = json::array();
  for (const auto& b : d.branches) {
    json jb = {{"id", b.id}, {"kind", to_string(b.kind)}, {"length", b.length}, {"vertices", b.vertices}};
    jb["endpoints"] = b.endpoints ? json{b.endpoints->first, b.endpoints->second} : json(nullptr);
    branches.push_back(std::move(jb));
  }
  auto core = two_core(g);
  auto q = quotient_graph(d);
  json qedges = json::array();
  for (const auto& e : q.edges)
    qedges.push_back({{"from", q.vertices[static_cast<std::size_t>(e.from)]},
                      {"to", q.vertices[static_cast<std::size_t>(e.to)]},
                      {"weight", e.weight},
                      {"branch", e.branch}});
  return {{"n", g.vertex_count()},
          {"b", d.branch_count()},
          {"branches", branches},
          {"junctions", d.junctions},
          {"two_core_size", core.core.vertex_count()},
          {"quotient", {{"vertices", q.vertices}, {"edges", qedges}}}};
}

json indistinct_json(const IndistinctSet& set) {
  json segs = json::array();
  for (const auto& s : set.segments)
    segs.push_back({{"a0", s.start.a}, {"b0", s.start.b}, {"a1", s.end.a}, {"b1", s.end.b}, {"slope", static_cast<int>(s.slope)}});
  return {{"s", set.source}, {"A", set.first_track}, {"B", set.second_track}, {"segments", segs}};
}

std::string indistinct_set_json(const IndistinctSet& set) { return indistinct_json(set).dump(); }

json solve_result_json(const SolveResult& r, bool include_time) {
  return {{"dimension", r.dimension},
          {"witness", r.witness},
          {"engine", r.engine},
          {"stats",
           {{"profiles", r.stats.profiles},
            {"feasibility_calls", r.stats.feasibility_calls},
            {"ms", include_time ? r.stats.elapsed_ms : 0}}}};
}

json brute_result_json(const BruteForceResult& r) {
  return {{"dimension", r.dimension}, {"witness", r.witness}, {"engine", "brute"}};
}

}  // namespace metdim
