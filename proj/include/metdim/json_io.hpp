#pragma once

#include <json.hpp>

#include "metdim/decomposition.hpp"
#include "metdim/geometry.hpp"
#include "metdim/oracle.hpp"
#include "metdim/solver.hpp"

namespace metdim {

/// {"n": int, "edges": [[u, v], ...]} with u < v, edges sorted.
nlohmann::json graph_to_json(const Graph& g);
/// Inverse of graph_to_json; throws ArgumentError on malformed documents.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json parameter_report_json(const ParameterReport& report);
nlohmann::json decomposition_json(const Graph& g, const BranchDecomposition& d);
nlohmann::json indistinct_json(const IndistinctSet& set);

/// `include_time` false writes ms as 0 so repeated runs are byte-identical.
nlohmann::json solve_result_json(const SolveResult& r, bool include_time);
nlohmann::json brute_result_json(const BruteForceResult& r);

}  // namespace metdim
