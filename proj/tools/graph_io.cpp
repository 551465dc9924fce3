#include "graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace lincolor::cli {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == 'c') continue;
    out.push_back({number, text.substr(first)});
  }
  return out;
}

// Reads exactly `count` unsigned integers and nothing else.
std::vector<std::size_t> read_numbers(const Line& line, std::istringstream& is, std::size_t count) {
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < count; ++i) {
    long long v = 0;
    if (!(is >> v) || v < 0) throw ParseError(line.number, "expected " + std::to_string(count) +
                                                               " non-negative integers in '" + line.text + "'");
    values.push_back(static_cast<std::size_t>(v));
  }
  std::string rest;
  if (is >> rest) throw ParseError(line.number, "unexpected trailing text '" + rest + "'");
  return values;
}

void add_edge_at(GraphBuilder& b, const Line& line, std::size_t u, std::size_t v) {
  try {
    b.add_edge(u, v);
  } catch (const InputError& e) {
    throw ParseError(line.number, e.what());
  }
}

Graph parse_edgelist(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  std::istringstream header(lines[0].text);
  const auto nm = read_numbers(lines[0], header, 2);
  const auto n = nm[0], m = nm[1];
  if (lines.size() - 1 != m) {
    throw ParseError(lines.size() > 1 + m ? lines[1 + m].number : lines.back().number,
                     "header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
  }
  GraphBuilder b(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream is(lines[i].text);
    const auto uv = read_numbers(lines[i], is, 2);
    add_edge_at(b, lines[i], uv[0], uv[1]);
  }
  return std::move(b).build();
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  std::optional<GraphBuilder> builder;
  std::size_t declared = 0, seen = 0, last_line = 0;
  for (const auto& line : lines) {
    last_line = line.number;
    std::istringstream is(line.text);
    std::string tag;
    is >> tag;
    if (tag == "p") {
      if (builder) throw ParseError(line.number, "duplicate problem line");
      std::string kind;
      if (!(is >> kind) || (kind != "edge" && kind != "col")) {
        throw ParseError(line.number, "expected 'p edge n m'");
      }
      const auto nm = read_numbers(line, is, 2);
      builder.emplace(nm[0]);
      declared = nm[1];
    } else if (tag == "e") {
      if (!builder) throw ParseError(line.number, "edge line before 'p edge' header");
      const auto uv = read_numbers(line, is, 2);
      if (uv[0] == 0 || uv[1] == 0) throw ParseError(line.number, "DIMACS vertices are 1-based");
      add_edge_at(*builder, line, uv[0] - 1, uv[1] - 1);
      ++seen;
    } else {
      throw ParseError(line.number, "unrecognized line '" + line.text + "'");
    }
  }
  if (!builder) throw ParseError(last_line == 0 ? 1 : last_line, "missing 'p edge n m' header");
  if (seen != declared) {
    throw ParseError(last_line, "header declares " + std::to_string(declared) + " edges but " +
                                    std::to_string(seen) + " edge lines follow");
  }
  return std::move(*builder).build();
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw InputError("unknown graph format '" + name + "' (expected auto, edgelist or dimacs)");
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  const auto lines = significant_lines(in);
  if (format == GraphFormat::automatic) {
    format = !lines.empty() && lines[0].text.starts_with("p") ? GraphFormat::dimacs : GraphFormat::edgelist;
  }
  return format == GraphFormat::dimacs ? parse_dimacs(lines) : parse_edgelist(lines);
}

Graph read_graph(const std::string& path, GraphFormat format, std::istream& stdin_stream) {
  if (path == "-") return parse_graph(stdin_stream, format);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return parse_graph(file, format);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace lincolor::cli
