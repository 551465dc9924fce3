#include "report.hpp"

#include "lincolor/lincolor.hpp"

#include <sstream>

namespace lincolor::cli {

using nlohmann::json;

namespace {

json vertex_list(const std::vector<Vertex>& vs) { return json(vs); }
json vertex_list(const VertexSet& s) { return json(s.to_vector()); }

json coloring_json(const LinearColoring& c, const PathCover& cover) {
  return {{"k", c.k}, {"colors", c.color}, {"paths", cover.paths}};
}

json forbidden_json(const std::optional<ForbiddenWitness>& w) {
  if (!w) return nullptr;
  return {{"pattern", w->pattern}, {"vertices", w->occurrence.mapping}};
}

template <typename T, typename F>
json optional_json(const std::optional<T>& value, F convert) {
  return value ? convert(*value) : json(nullptr);
}

void guard(bool exceeded, const std::string& what, std::size_t bound, std::size_t n) {
  if (exceeded) {
    throw GuardError(what + " is limited to " + std::to_string(bound) + " vertices (graph has " +
                     std::to_string(n) + "); pass --force to override");
  }
}

}  // namespace

json analyze(const Graph& g, const AnalyzeOptions& options) {
  const auto n = g.size();
  guard(!options.force && n > options.guards.exact_numbers, "exact chi/omega/alpha", options.guards.exact_numbers, n);
  guard(!options.force && options.deep && n > options.guards.hereditary, "--deep co-linear/linear checks",
        options.guards.hereditary, n);

  const auto co = complement(g);
  PathCover cover, co_cover;
  const auto lin = linear_color(g, cover);
  const auto co_lin = linear_color(co, co_cover);
  const auto nums = compute_numbers(g);
  const bool brute_ok = options.force || n <= options.guards.brute_lambda;

  json report;
  report["graph"] = {{"id", options.id}, {"n", n}, {"m", g.edge_count()}};
  report["numbers"] = {
      {"chi", nums.chi},
      {"omega", nums.omega},
      {"alpha", nums.alpha},
      {"lambda", lin.k},
      {"lambda_complement", co_lin.k},
      {"lambda_bruteforce", brute_ok ? json(nums.lambda) : json(nullptr)},
      {"lambda_complement_bruteforce", brute_ok ? json(brute_lambda(co)) : json(nullptr)},
  };

  const auto classes = classify(g);
  report["classes"] = {
      {"chordal", classes.chordal},
      {"co_chordal", classes.co_chordal},
      {"split", classes.split},
      {"threshold", classes.threshold},
      {"quasi_threshold", classes.quasi_threshold},
      {"strongly_chordal", classes.strongly_chordal},
      {"p6_free", classes.p6_free},
      {"colinear", nullptr},
      {"linear", nullptr},
  };
  report["linear_coloring"] = coloring_json(lin, cover);
  report["complement_linear_coloring"] = coloring_json(co_lin, co_cover);

  if (classes.strongly_chordal && classes.p6_free) {
    const auto ord = strong_elimination_ordering(g);
    const auto kappa = kappa_coloring(g, ord);
    report["kappa"] = {{"k", kappa.k},
                       {"colors", kappa.color},
                       {"sigma", ord.sigma},
                       {"independent", vertex_list(ord.independent)}};
  } else {
    report["kappa"] = nullptr;
  }

  json witnesses;
  witnesses["hole"] = optional_json(classes.hole, [](const auto& h) { return vertex_list(h); });
  witnesses["perfect_elimination_ordering"] =
      optional_json(classes.perfect_ordering, [](const auto& o) { return vertex_list(o.sigma); });
  witnesses["strong_elimination_ordering"] =
      optional_json(classes.strong_ordering, [](const auto& o) { return vertex_list(o.sigma); });
  witnesses["strongly_chordal_obstruction"] =
      optional_json(classes.strongly_chordal_obstruction, [](const auto& s) { return vertex_list(s); });
  witnesses["threshold_obstruction"] = forbidden_json(classes.threshold_obstruction);
  witnesses["split_obstruction"] = forbidden_json(classes.split_obstruction);
  witnesses["quasi_threshold_obstruction"] = forbidden_json(classes.quasi_threshold_obstruction);
  witnesses["p6"] = optional_json(classes.p6, [](const auto& o) { return vertex_list(o.mapping); });
  witnesses["colinear_violation"] = nullptr;
  witnesses["linear_violation"] = nullptr;

  if (options.deep) {
    const auto colinear = is_colinear(g);
    const auto linear = is_linear(g);
    report["classes"]["colinear"] = colinear.holds;
    report["classes"]["linear"] = linear.holds;
    if (colinear.witness) {
      witnesses["colinear_violation"] = {{"subset", vertex_list(colinear.witness->subset)},
                                         {"chi", colinear.witness->lhs},
                                         {"lambda_complement", colinear.witness->rhs}};
    }
    if (linear.witness) {
      witnesses["linear_violation"] = {{"subset", vertex_list(linear.witness->subset)},
                                       {"alpha", linear.witness->lhs},
                                       {"lambda", linear.witness->rhs}};
    }
  }
  report["witnesses"] = std::move(witnesses);
  return report;
}

std::string render_pretty(const json& report) {
  std::ostringstream os;
  const auto& graph = report["graph"];
  os << "graph " << graph["id"].get<std::string>() << ": n=" << graph["n"] << " m=" << graph["m"] << "\n\n";
  os << "numbers\n";
  for (const auto& [key, value] : report["numbers"].items()) {
    os << "  " << key << std::string(30 - std::min<std::size_t>(29, key.size()), ' ') << value.dump() << '\n';
  }
  os << "\nclasses\n";
  for (const auto& [key, value] : report["classes"].items()) {
    os << "  " << key << std::string(30 - std::min<std::size_t>(29, key.size()), ' ')
       << (value.is_null() ? std::string("-") : value.dump()) << '\n';
  }
  os << "\nlinear coloring (k=" << report["linear_coloring"]["k"] << ")\n";
  const auto& colors = report["linear_coloring"]["colors"];
  for (std::size_t v = 0; v < colors.size(); ++v) os << "  " << v << " -> " << colors[v] << '\n';
  os << "\nwitnesses\n";
  for (const auto& [key, value] : report["witnesses"].items()) {
    if (!value.is_null()) os << "  " << key << ": " << value.dump() << '\n';
  }
  return os.str();
}

}  // namespace lincolor::cli
