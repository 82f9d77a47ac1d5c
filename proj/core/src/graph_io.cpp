#include "strongdim/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace smd {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  if (ss >> rest) return false;  // trailing tokens
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    if (!parse_two_ints(line, n, m)) throw parse_error(lineno, "expected header \"n m\"");
    break;
  }
  if (n < 0) throw parse_error(lineno == 0 ? 1 : lineno, "missing header \"n m\"");
  if (m < 0) throw parse_error(lineno, "edge count must be nonnegative");
  if (n > 1000000) throw parse_error(lineno, "order too large");
  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line)) throw parse_error(lineno + 1, "expected " + std::to_string(m) +
                                                   " edge lines, found " + std::to_string(seen));
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    long long u, v;
    if (!parse_two_ints(line, u, v)) throw parse_error(lineno, "expected edge \"u v\"");
    if (u < 0 || v >= n) throw parse_error(lineno, "vertex id out of range");
    if (u >= v) throw parse_error(lineno, "edges must satisfy u < v");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(out, g);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream ss(text);
  return read_graph(ss);
}

}  // namespace smd
