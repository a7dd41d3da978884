#include "zforce/edge_list.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "zforce/errors.hpp"

namespace zf {
namespace {

// Reads exactly two non-negative integers from a line.
bool two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return a >= 0 && b >= 0;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  long long n = 0;
  long long m = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (!two_ints(line, n, m)) throw ParseError(lineno, "expected header \"n m\"");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(lineno, "missing header \"n m\"");
  if (n > static_cast<long long>(kMaxVertices)) {
    throw ParseError(lineno, "vertex count " + std::to_string(n) + " exceeds the limit of " +
                                 std::to_string(kMaxVertices));
  }

  ParsedGraph out;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long long count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    long long u = 0;
    long long v = 0;
    if (!two_ints(line, u, v)) throw ParseError(lineno, "expected edge \"u v\"");
    if (u >= n || v >= n) {
      throw ParseError(lineno, "vertex index " + std::to_string(std::max(u, v)) +
                                   " is not below n = " + std::to_string(n));
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    ++count;
    if (u > v) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": reversed pair " +
                             std::to_string(u) + " " + std::to_string(v));
      std::swap(u, v);
    }
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(e).second) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                             std::to_string(u) + " " + std::to_string(v));
      continue;
    }
    edges.push_back(e);
  }
  if (count != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges but " +
                                 std::to_string(count) + " were listed");
  }
  out.graph = Graph(static_cast<int>(n), edges);
  for (auto& w : out.graph.validate()) out.warnings.push_back(w);
  return out;
}

ParsedGraph read_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::string s = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

}  // namespace zf
