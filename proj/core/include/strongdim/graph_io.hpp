#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "strongdim/graph.hpp"

namespace smd {

/// Malformed graph file; line() is the 1-based offending line.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

// Text interchange format. '#' lines are comments; the first non-comment
// line is "n m"; then exactly m lines "u v" with 0 <= u < v < n. Writers
// emit edges in lexicographic order.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace smd
