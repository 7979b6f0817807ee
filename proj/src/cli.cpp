#include "tdsolve/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tdsolve/combinators.hpp"
#include "tdsolve/decomp.hpp"
#include "tdsolve/graph.hpp"
#include "tdsolve/oracle.hpp"
#include "tdsolve/problem.hpp"

namespace tdsolve {

namespace {

std::string witness_text(const ExtractedPartition& p) {
  std::ostringstream out;
  if (p.kind == PartitionKind::Vertices) {
    for (const auto& [v, part] : p.vertex_part) {
      out << "v " << v << " " << part << "\n";
    }
  } else if (p.kind == PartitionKind::Edges) {
    for (const auto& [e, part] : p.edge_part) {
      out << "e " << e.first << " " << e.second << " " << part << "\n";
    }
  }
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"tree-decomposition solver for composed graph families",
               "tdsolve"};

  std::string graph_path, td_path, problem_text, preset_name, emit_td_path;
  bool want_witness = false, want_json = false, want_oracle = false;
  bool want_stats = false, want_bench = false;
  int parallel = 1;

  app.add_option("--graph", graph_path, "input graph (.gr)")->required();
  app.add_option("--td", td_path,
                 "tree decomposition (.td); built heuristically when absent");
  app.add_option("--problem", problem_text, "problem expression");
  app.add_option("--preset", preset_name,
                 "named problem: 3col, vc=<k>, two-trees, arb=<l>");
  app.add_flag("--witness", want_witness,
               "print a partition witnessing a yes answer");
  app.add_flag("--json", want_json, "write the result as JSON");
  app.add_flag("--oracle", want_oracle,
               "cross-check against the brute-force oracle (exit 3 on "
               "disagreement)");
  app.add_flag("--stats", want_stats, "print solver statistics");
  app.add_option("--emit-td", emit_td_path,
                 "write the decomposition the solver ran on to this file");
  app.add_flag("--bench", want_bench,
               "print a CSV timing row instead of the normal output");
  app.add_option("--parallel", parallel,
                 "worker threads for independent subtrees")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("tdsolve");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (problem_text.empty() == preset_name.empty()) {
      err << "exactly one of --problem or --preset is required\n";
      return 2;
    }
    ProblemExpr expr;
    if (!preset_name.empty()) {
      auto p = preset_problem(preset_name);
      if (!p) {
        err << "unknown preset '" << preset_name << "'\n";
        return 2;
      }
      expr = *p;
    } else {
      expr = parse_problem(problem_text);
    }

    std::ifstream gin(graph_path);
    if (!gin) {
      err << "cannot open graph file '" << graph_path << "'\n";
      return 2;
    }
    GrParseResult gr = parse_gr(gin);
    if (gr.duplicate_edges > 0) {
      err << "warning: " << gr.duplicate_edges
          << " duplicate edge line(s) ignored\n";
    }
    const Graph& g = gr.graph;

    std::optional<RootedTreeDecomposition> dec;
    if (!td_path.empty()) {
      std::ifstream tin(td_path);
      if (!tin) {
        err << "cannot open decomposition file '" << td_path << "'\n";
        return 2;
      }
      dec = parse_td(tin, g);
    }

    auto core = build_core(expr);
    RunOptions opts;
    opts.want_witness = want_witness;
    opts.parallel = parallel;
    Verdict v = dec ? run(*core, g, *dec, opts) : run(*core, g, opts);

    const bool partition_problem = expr.op == ProblemExpr::Op::VertPart ||
                                   expr.op == ProblemExpr::Op::EdgePart ||
                                   expr.op == ProblemExpr::Op::GraphPart;
    ExtractedPartition part;
    if (v.yes && v.witness && partition_problem) {
      part = extract_partition(*v.witness, *v.decomposition);
    }

    if (want_bench) {
      out << "graph,problem,answer,nodes,width,max_states,total_states,"
             "elapsed_ms\n";
      out << graph_path << "," << to_string(expr) << ","
          << (v.yes ? "yes" : "no") << "," << v.stats.nodes << ","
          << v.stats.width << "," << v.stats.max_states << ","
          << v.stats.total_states << "," << v.stats.elapsed_ms << "\n";
    } else if (want_json) {
      nlohmann::ordered_json j;
      j["answer"] = v.yes ? "yes" : "no";
      if (want_witness && v.yes) {
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        if (part.kind == PartitionKind::Vertices) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& [vx, px] : part.vertex_part) {
            arr.push_back({vx, px});
          }
          w["vertices"] = arr;
        } else if (part.kind == PartitionKind::Edges) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& [e, px] : part.edge_part) {
            arr.push_back({e.first, e.second, px});
          }
          w["edges"] = arr;
        }
        j["witness"] = w;
      }
      nlohmann::ordered_json stats;
      stats["nodes"] = v.stats.nodes;
      stats["width"] = v.stats.width;
      stats["max_states"] = v.stats.max_states;
      stats["total_states"] = v.stats.total_states;
      stats["elapsed_ms"] = v.stats.elapsed_ms;
      j["stats"] = stats;
      out << j.dump(2) << "\n";
    } else {
      out << (v.yes ? "YES" : "NO") << "\n";
      if (want_witness && v.yes) out << witness_text(part);
      if (want_stats) {
        out << "stats: nodes=" << v.stats.nodes << " width=" << v.stats.width
            << " max_states=" << v.stats.max_states
            << " total_states=" << v.stats.total_states
            << " transitions=" << v.stats.total_transitions
            << " elapsed_ms=" << v.stats.elapsed_ms << "\n";
      }
    }

    if (!emit_td_path.empty()) {
      std::ofstream tout(emit_td_path);
      if (!tout) {
        err << "cannot write decomposition file '" << emit_td_path << "'\n";
        return 2;
      }
      tout << serialize_td(*v.decomposition, g);
    }

    if (want_oracle) {
      bool expected = oracle_satisfies(expr, g);
      if (expected != v.yes) {
        err << "oracle disagrees: solver says " << (v.yes ? "yes" : "no")
            << ", oracle says " << (expected ? "yes" : "no") << "\n";
        return 3;
      }
    }
    return v.yes ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tdsolve
