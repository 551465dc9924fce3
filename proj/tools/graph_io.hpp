#pragma once

#include "lincolor/graph.hpp"

#include <iosfwd>
#include <string>

namespace lincolor::cli {

enum class GraphFormat { automatic, edgelist, dimacs };

GraphFormat parse_format(const std::string& name);

/// Malformed graph text. what() starts with "line N:".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge list: "n m" then m lines "u v" with 0-based labels.
/// DIMACS: "p edge n m" then "e u v" lines with 1-based labels.
/// Lines starting with 'c' and blank lines are skipped in both.
Graph parse_graph(std::istream& in, GraphFormat format);

/// Reads from a file, or from `stdin_stream` when path is "-".
Graph read_graph(const std::string& path, GraphFormat format, std::istream& stdin_stream);

void write_edgelist(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace lincolor::cli
