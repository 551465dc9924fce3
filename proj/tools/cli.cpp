#include "cli.hpp"

#include "graph_io.hpp"
#include "report.hpp"
#include "verify.hpp"

#include "lincolor/lincolor.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace lincolor::cli {

namespace {

const std::vector<std::string> kGenKinds{"cycle",    "path",      "complete",         "star",  "ksun",
                                         "incomplete-ksun", "threshold", "strongly-chordal", "random"};

struct GraphInput {
  std::string path = "-";
  std::string format = "auto";
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("graph", input.path, "Graph file, or - for stdin")->capture_default_str();
  cmd->add_option("-f,--format", input.format, "auto, edgelist or dimacs")->capture_default_str();
}

Graph load(const GraphInput& input, std::istream& in) {
  return read_graph(input.path, parse_format(input.format), in);
}

Graph generate(const std::string& kind, std::size_t n, std::uint64_t seed, unsigned percent) {
  if (kind == "cycle") return gen_cycle(n);
  if (kind == "path") return gen_path(n);
  if (kind == "complete") return gen_complete(n);
  if (kind == "star") return gen_star(n);
  if (kind == "ksun") return k_sun(n);
  if (kind == "incomplete-ksun") return incomplete_k_sun(n);
  if (kind == "threshold") return gen_threshold(n, seed);
  if (kind == "strongly-chordal") return gen_strongly_chordal(n, seed);
  if (kind == "random") return gen_random(n, percent, seed);
  throw InputError("unknown generator kind '" + kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear colorings, linear chromatic numbers and related graph classes", "lincolor"};
  app.require_subcommand(1);

  GraphInput analyze_in;
  AnalyzeOptions analyze_opts;
  bool pretty = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report graph numbers, class memberships and witnesses as JSON");
  add_graph_input(analyze_cmd, analyze_in);
  analyze_cmd->add_flag("--deep", analyze_opts.deep, "Also run the exponential co-linear/linear checks");
  analyze_cmd->add_flag("--force", analyze_opts.force, "Ignore size guards");
  analyze_cmd->add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  analyze_cmd->add_option("--id", analyze_opts.id, "Graph id recorded in the report");

  GraphInput lincolor_in;
  bool lincolor_json = false;
  auto* lincolor_cmd = app.add_subcommand("lincolor", "Optimal linear coloring via the neighborhood DAG");
  add_graph_input(lincolor_cmd, lincolor_in);
  lincolor_cmd->add_flag("--json", lincolor_json, "Emit JSON");

  GraphInput dag_in;
  auto* dag_cmd = app.add_subcommand("dag", "Neighborhood-inclusion DAG in DOT format");
  add_graph_input(dag_cmd, dag_in);

  std::string suite;
  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest graph size (or k for suns) to sweep");
  verify_cmd->add_option("--seed", verify_opts.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--samples", verify_opts.samples, "Number of generated samples");

  std::string kind;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  unsigned percent = 50;
  std::string out_format = "edgelist";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("kind", kind, "Graph family")->required()->check(CLI::IsMember(kGenKinds));
  gen_cmd->add_option("n", gen_n, "Vertex count (k for sun graphs)")->required();
  gen_cmd->add_option("seed", gen_seed, "Seed for random families")->capture_default_str();
  gen_cmd->add_option("--percent", percent, "Edge probability in percent for 'random'")
      ->check(CLI::Range(0u, 100u))
      ->capture_default_str();
  gen_cmd->add_option("--format", out_format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      if (analyze_opts.id == "graph" && analyze_in.path != "-") analyze_opts.id = analyze_in.path;
      const auto report = analyze(load(analyze_in, in), analyze_opts);
      out << (pretty ? render_pretty(report) : report.dump(2) + "\n");
    } else if (*lincolor_cmd) {
      const auto g = load(lincolor_in, in);
      PathCover cover;
      const auto c = linear_color(g, cover);
      if (lincolor_json) {
        out << nlohmann::json{{"k", c.k}, {"colors", c.color}, {"paths", cover.paths}}.dump(2) << '\n';
      } else {
        out << "k " << c.k << '\n';
        for (Vertex v = 0; v < g.size(); ++v) out << v << ' ' << c.color[v] << '\n';
      }
    } else if (*dag_cmd) {
      out << to_dot(build_dag(load(dag_in, in)));
    } else if (*verify_cmd) {
      const auto results = run_suite(suite, verify_opts);
      print_results(out, results);
      for (const auto& r : results) {
        if (!r.ok()) return kCheckFailed;
      }
    } else if (*gen_cmd) {
      const auto g = generate(kind, gen_n, gen_seed, percent);
      if (out_format == "dimacs") {
        write_dimacs(out, g);
      } else {
        write_edgelist(out, g);
      }
    }
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    if (*verify_cmd) {
      err << "available suites:";
      for (const auto& s : suite_names()) err << ' ' << s;
      err << " all\n";
    }
    return kUsage;
  }
  return kOk;
}

}  // namespace lincolor::cli
