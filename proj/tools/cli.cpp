#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "metdim/decomposition.hpp"
#include "metdim/errors.hpp"
#include "metdim/geometry.hpp"
#include "metdim/json_io.hpp"
#include "metdim/oracle.hpp"
#include "metdim/solver.hpp"

namespace metdim::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string gen;
  std::string engine = "auto";
  std::string format = "text";
  long long budget_ms = 0;  // 0: unlimited
  std::uint64_t seed = 1;
  std::string set;
  bool timing = false;
  // inspect-indistinct
  int source = 0;
  int track_a = 0;
  int track_b = 0;
  // bench
  std::string corpus;
  std::string engines = "brute,fpt-pragmatic";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> words(std::string spec) {
  std::replace_if(spec.begin(), spec.end(), [](char c) { return c == 'x' || c == ',' || c == ':'; }, ' ');
  std::istringstream in(spec);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

long long to_number(const std::string& w) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || w.empty()) throw ArgumentError("not a number: " + w);
  return value;
}

Graph generated(const std::string& spec, std::uint64_t seed) {
  auto w = words(spec);
  if (w.empty()) throw ArgumentError("empty generator spec");
  std::vector<long long> params;
  for (std::size_t i = 1; i < w.size(); ++i) params.push_back(to_number(w[i]));
  if ((w[0] == "random_connected" || w[0] == "random") && params.size() == 2) params.push_back(static_cast<long long>(seed));
  return generate(w[0] == "random" ? "random_connected" : w[0], params);
}

Graph load_graph(const Options& o, std::istream& in) {
  if (!o.gen.empty()) return generated(o.gen, o.seed);
  if (o.input.empty()) throw ArgumentError("no input: give a file, '-' for stdin, or --gen");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.input);
    if (!f) throw ArgumentError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(1, e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

Budget make_budget(const Options& o) {
  Budget b;
  if (o.budget_ms > 0) b.time = std::chrono::milliseconds(o.budget_ms);
  return b;
}

std::vector<Vertex> parse_set(const std::string& s) {
  std::vector<Vertex> out;
  for (const auto& w : split(s, ',')) out.push_back(static_cast<Vertex>(to_number(w)));
  return out;
}

std::string join(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0) throw ArgumentError("graph has no vertices");
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
}

struct Solved {
  int dimension = 0;
  std::vector<Vertex> witness;
  json report;
};

Solved solve_with(const Graph& g, const std::string& engine, const Options& o) {
  std::string e = engine;
  if (e == "auto") e = g.vertex_count() <= 12 ? "brute" : "fpt-pragmatic";
  if (e == "brute") {
    if (g.vertex_count() < 2) throw ArgumentError("metric dimension needs at least two vertices");
    require_connected(g);
    auto r = metric_dimension_bruteforce(g, make_budget(o));
    return {r.dimension, r.witness, brute_result_json(r)};
  }
  Mode mode;
  if (e == "fpt-faithful") mode = Mode::Faithful;
  else if (e == "fpt-pragmatic") mode = Mode::Pragmatic;
  else throw ArgumentError("unknown engine " + e);
  auto r = solve_fpt(g, mode, make_budget(o));
  return {r.dimension, r.witness, solve_result_json(r, o.timing)};
}

// Errors shared by all graph commands, mapped onto the exit-code contract.
template <typename Body>
int guarded(const Options& o, std::istream& in, std::ostream& out, std::ostream& err, Body body) {
  const bool js = o.format == "json";
  Graph g;
  try {
    g = load_graph(o, in);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    return body(g);
  } catch (const DisconnectedError&) {
    auto comps = connected_components(g);
    if (js) out << json{{"error", "disconnected"}, {"components", comps}}.dump() << '\n';
    err << "graph is disconnected; components:\n";
    for (const auto& c : comps) err << "  " << join(c) << '\n';
    return kDisconnected;
  } catch (const ResourceError& e) {
    if (js) out << json{{"error", "resource"}, {"lower_bound", e.lower_bound()}, {"upper_bound", e.upper_bound()}}.dump() << '\n';
    err << "budget exhausted: " << e.what() << " (bounds " << e.lower_bound() << ".." << e.upper_bound() << ")\n";
    return kResource;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(o, in, out, err, [&](const Graph& g) {
    require_connected(g);
    auto d = compute_branches(g);
    auto j = decomposition_json(g, d);
    if (o.format == "json") {
      out << j.dump() << '\n';
    } else {
      out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", branches " << d.branch_count()
          << ", 2-core " << j["two_core_size"].get<int>() << '\n';
      for (const auto& b : d.branches)
        out << "  branch " << b.id << " (" << to_string(b.kind) << ", length " << b.length << "): " << join(b.vertices) << '\n';
      out << "junctions: " << join(d.junctions) << '\n';
    }
    return kOk;
  });
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(o, in, out, err, [&](const Graph& g) {
    auto r = solve_with(g, o.engine, o);
    if (o.format == "json") out << r.report.dump() << '\n';
    else out << "dimension " << r.dimension << "\nwitness " << join(r.witness) << '\n';
    return kOk;
  });
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto set = parse_set(o.set);
  if (set.empty()) {
    err << "error: empty set\n";
    return kUsage;
  }
  return guarded(o, in, out, err, [&](const Graph& g) {
    require_connected(g);
    auto check = is_locating_set(g, set);
    if (o.format == "json") {
      json j = {{"locating", check.locating}};
      if (check.unresolved) j["unresolved"] = {check.unresolved->first, check.unresolved->second};
      out << j.dump() << '\n';
    } else if (check.locating) {
      out << "OK\n";
    } else {
      out << "not locating: " << check.unresolved->first << " and " << check.unresolved->second << " share a signature\n";
    }
    return check.locating ? kOk : kNotLocating;
  });
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(o, in, out, err, [&](const Graph& g) {
    require_connected(g);
    auto r = check_parameter_bounds(g);
    if (o.format == "json") out << parameter_report_json(r).dump() << '\n';
    else
      out << "b " << r.branches << ", ell " << r.max_leaf << ", ell <= 2b " << (r.leaf_bound_holds ? "yes" : "NO")
          << ", b/ell^2 " << r.ratio << '\n';
    return kOk;
  });
}

int cmd_inspect(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(o, in, out, err, [&](const Graph& g) {
    require_connected(g);
    GeometryContext ctx(g);
    if (o.source < 0 || o.source >= g.vertex_count()) throw ArgumentError("source out of range");
    for (int t : {o.track_a, o.track_b})
      if (t < 0 || t >= ctx.track_count()) throw ArgumentError("track id out of range");
    auto set = indistinct_set(ctx, o.source, o.track_a, o.track_b);
    out << indistinct_json(set).dump() << '\n';
    return kOk;
  });
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    auto g = generated(o.gen, o.seed);
    if (o.format == "json") out << graph_to_json(g).dump() << '\n';
    else out << to_edge_list(g);
    return kOk;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// "cycle 3..10; complete 3..6": each parameter may be a range, expanded as a product.
std::vector<std::string> expand_corpus(const std::string& corpus) {
  std::vector<std::string> specs;
  for (const auto& entry : split(corpus, ';')) {
    std::istringstream in(entry);
    std::vector<std::string> w;
    for (std::string s; in >> s;) w.push_back(s);
    if (w.empty()) continue;
    std::vector<std::string> partial{w[0]};
    for (std::size_t i = 1; i < w.size(); ++i) {
      long long lo, hi;
      auto dots = w[i].find("..");
      if (dots == std::string::npos) lo = hi = to_number(w[i]);
      else lo = to_number(w[i].substr(0, dots)), hi = to_number(w[i].substr(dots + 2));
      if (hi < lo) throw ArgumentError("empty range " + w[i]);
      std::vector<std::string> next;
      for (const auto& p : partial)
        for (long long v = lo; v <= hi; ++v) next.push_back(p + " " + std::to_string(v));
      partial = std::move(next);
    }
    specs.insert(specs.end(), partial.begin(), partial.end());
  }
  if (specs.empty()) throw ArgumentError("empty corpus");
  return specs;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> specs, engines = split(o.engines, ',');
  try {
    specs = expand_corpus(o.corpus);
    if (engines.empty()) throw ArgumentError("no engines");
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  json rows = json::array();
  bool disagree = false, exhausted = false;
  for (const auto& spec : specs) {
    Graph g;
    try {
      g = generated(spec, o.seed);
    } catch (const ArgumentError& e) {
      err << "error: " << spec << ": " << e.what() << '\n';
      return kUsage;
    }
    json row = {{"graph", spec}, {"n", g.vertex_count()}};
    json results = json::object();
    std::optional<int> seen;
    bool row_disagrees = false;
    for (const auto& engine : engines) {
      auto start = std::chrono::steady_clock::now();
      json r;
      try {
        auto s = solve_with(g, engine, o);
        r = {{"dimension", s.dimension}, {"witness", s.witness}};
        if (seen && *seen != s.dimension) row_disagrees = true;
        seen = s.dimension;
      } catch (const ResourceError& e) {
        exhausted = true;
        r = {{"status", "resource"}, {"lower_bound", e.lower_bound()}, {"upper_bound", e.upper_bound()}};
      } catch (const DisconnectedError&) {
        r = {{"status", "disconnected"}};
      } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      if (o.timing)
        r["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      results[engine] = r;
    }
    row["results"] = results;
    row["agree"] = !row_disagrees;
    if (row_disagrees) {
      disagree = true;
      err << "engines disagree on " << spec << ":\n" << to_edge_list(g);
    }
    rows.push_back(std::move(row));
  }
  if (o.format == "json") {
    out << json{{"rows", rows}, {"agree", !disagree}}.dump() << '\n';
  } else {
    for (const auto& row : rows) {
      out << row["graph"].get<std::string>();
      for (auto it = row["results"].begin(); it != row["results"].end(); ++it) {
        out << "  " << it.key() << "=";
        if (it->contains("dimension")) out << (*it)["dimension"].get<int>();
        else out << (*it)["status"].get<std::string>();
      }
      out << (row["agree"].get<bool>() ? "" : "  DISAGREE") << '\n';
    }
  }
  if (disagree) return kDisagreement;
  return exhausted ? kResource : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric dimension of graphs with few branches"};
  app.require_subcommand(1);
  Options o;

  auto graph_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "edge-list file, or - for stdin");
    c->add_option("--gen", o.gen, "generator spec such as \"spider 3x2\"");
    c->add_option("--seed", o.seed, "seed for random generators");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto budgeted = [&](CLI::App* c) {
    c->add_option("--engine", o.engine, "brute, fpt-faithful, fpt-pragmatic or auto")
        ->check(CLI::IsMember({"brute", "fpt-faithful", "fpt-pragmatic", "auto"}));
    c->add_option("--budget-ms", o.budget_ms, "time budget per solve, 0 for none")->check(CLI::NonNegativeNumber);
    c->add_flag("--timing", o.timing, "report elapsed milliseconds");
  };

  auto* decompose = app.add_subcommand("decompose", "branches, junctions, 2-core and quotient graph");
  graph_input(decompose);
  auto* solve = app.add_subcommand("solve", "metric dimension and a witness");
  graph_input(solve);
  budgeted(solve);
  auto* verify = app.add_subcommand("verify", "check whether --set is locating");
  graph_input(verify);
  verify->add_option("--set", o.set, "landmarks, e.g. \"0,3,7\"")->required();
  auto* bounds = app.add_subcommand("bounds", "branch count against max leaf number");
  graph_input(bounds);
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("spec", o.gen, "e.g. \"cycle 6\" or \"random 10 14\"")->required();
  gen->add_option("--seed", o.seed, "seed for random generators");
  gen->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* bench = app.add_subcommand("bench", "compare engines over a corpus");
  bench->add_option("corpus", o.corpus, "e.g. \"cycle 3..10; complete 3..6\"")->required();
  bench->add_option("--engines", o.engines, "comma-separated engine list");
  bench->add_option("--seed", o.seed, "seed for random generators");
  bench->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  bench->add_option("--budget-ms", o.budget_ms, "time budget per solve")->check(CLI::NonNegativeNumber);
  bench->add_flag("--timing", o.timing, "report elapsed milliseconds");
  auto* inspect = app.add_subcommand("inspect-indistinct", "dump the indistinct set of s on tracks A and B");
  graph_input(inspect);
  inspect->add_option("--s", o.source, "landmark vertex")->required();
  inspect->add_option("--A", o.track_a, "first track id")->required();
  inspect->add_option("--B", o.track_b, "second track id")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (decompose->parsed()) return cmd_decompose(o, in, out, err);
  if (solve->parsed()) return cmd_solve(o, in, out, err);
  if (verify->parsed()) return cmd_verify(o, in, out, err);
  if (bounds->parsed()) return cmd_bounds(o, in, out, err);
  if (gen->parsed()) return cmd_gen(o, out, err);
  if (bench->parsed()) return cmd_bench(o, out, err);
  if (inspect->parsed()) return cmd_inspect(o, in, out, err);
  return kUsage;
}

}  // namespace metdim::cli
