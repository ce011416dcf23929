#include "gkern/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gkern {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_real(const std::string& tok, const std::string& src, int line) {
  char* end = nullptr;
  const double x = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size())
    throw ParseError(src, line, "expected a real number, got '" + tok + "'");
  return x;
}

int parse_index(const std::string& tok, const std::string& src, int line) {
  char* end = nullptr;
  const long x = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || end != tok.c_str() + tok.size())
    throw ParseError(src, line, "expected an integer, got '" + tok + "'");
  return static_cast<int>(x);
}

struct Block {
  std::string id;
  std::string cls;
  int opened_at = 0;
  bool has_ve = false;
  bool has_points = false;
  std::vector<std::string> vlabels;
  std::vector<Vector> vattrs;
  int vattr_dim = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> elabels;
  std::vector<Vector> eattrs;
  int eattr_dim = -1;
  std::vector<LabeledPoint> points;
};

}  // namespace

Dataset parse_dataset(std::istream& in, const std::string& src) {
  Dataset ds;
  std::unordered_set<std::string> ids;
  Block blk;
  bool open = false;
  int lineno = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const std::string& cmd = tokens[0];

    if (cmd == "graph") {
      if (open) throw ParseError(src, lineno, "'graph' inside an open block (missing 'end')");
      if (tokens.size() < 2 || tokens.size() > 3)
        throw ParseError(src, lineno, "expected: graph <id> [<class>]");
      if (tokens[1].find(',') != std::string::npos)
        throw ParseError(src, lineno, "graph id must not contain ','");
      if (!ids.insert(tokens[1]).second)
        throw ParseError(src, lineno, "duplicate graph id '" + tokens[1] + "'");
      blk = Block{};
      blk.id = tokens[1];
      blk.cls = tokens.size() == 3 ? tokens[2] : "";
      blk.opened_at = lineno;
      open = true;
    } else if (cmd == "v") {
      if (!open) throw ParseError(src, lineno, "'v' outside a graph block");
      if (blk.has_points) throw ParseError(src, lineno, "'v' in a point block");
      if (tokens.size() < 3) throw ParseError(src, lineno, "expected: v <index> <label> [<real>...]");
      blk.has_ve = true;
      const int idx = parse_index(tokens[1], src, lineno);
      if (idx != static_cast<int>(blk.vlabels.size()))
        throw ParseError(src, lineno, "vertex indices must be consecutive from 0 (expected " +
                                          std::to_string(blk.vlabels.size()) + ")");
      const int dim = static_cast<int>(tokens.size()) - 3;
      if (blk.vattr_dim < 0) blk.vattr_dim = dim;
      if (dim != blk.vattr_dim)
        throw ParseError(src, lineno, "inconsistent vertex attribute arity");
      Vector attrs(dim);
      for (int i = 0; i < dim; ++i) attrs(i) = parse_real(tokens[3 + i], src, lineno);
      blk.vlabels.push_back(tokens[2]);
      blk.vattrs.push_back(std::move(attrs));
    } else if (cmd == "e") {
      if (!open) throw ParseError(src, lineno, "'e' outside a graph block");
      if (blk.has_points) throw ParseError(src, lineno, "'e' in a point block");
      if (tokens.size() < 4) throw ParseError(src, lineno, "expected: e <u> <v> <label> [<real>...]");
      blk.has_ve = true;
      const int u = parse_index(tokens[1], src, lineno);
      const int v = parse_index(tokens[2], src, lineno);
      const int n = static_cast<int>(blk.vlabels.size());
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(src, lineno, "edge endpoint out of range (graph has " +
                                          std::to_string(n) + " vertices so far)");
      if (u == v) throw ParseError(src, lineno, "self-loops are not allowed");
      for (const auto& [a, b] : blk.edges)
        if ((a == std::min(u, v)) && (b == std::max(u, v)))
          throw ParseError(src, lineno, "duplicate edge (" + tokens[1] + "," + tokens[2] + ")");
      const int dim = static_cast<int>(tokens.size()) - 4;
      if (blk.eattr_dim < 0) blk.eattr_dim = dim;
      if (dim != blk.eattr_dim)
        throw ParseError(src, lineno, "inconsistent edge attribute arity");
      Vector attrs(dim);
      for (int i = 0; i < dim; ++i) attrs(i) = parse_real(tokens[4 + i], src, lineno);
      blk.edges.emplace_back(std::min(u, v), std::max(u, v));
      blk.elabels.push_back(tokens[3]);
      blk.eattrs.push_back(std::move(attrs));
    } else if (cmd == "point") {
      if (!open) throw ParseError(src, lineno, "'point' outside a graph block");
      if (blk.has_ve) throw ParseError(src, lineno, "'point' cannot be mixed with v/e lines");
      if (tokens.size() != 5) throw ParseError(src, lineno, "expected: point <label> <x> <y> <z>");
      blk.has_points = true;
      LabeledPoint pt;
      pt.label = tokens[1];
      for (int i = 0; i < 3; ++i) {
        pt.position(i) = parse_real(tokens[2 + i], src, lineno);
        if (!std::isfinite(pt.position(i)))
          throw ParseError(src, lineno, "point coordinates must be finite");
      }
      blk.points.push_back(std::move(pt));
    } else if (cmd == "end") {
      if (!open) throw ParseError(src, lineno, "'end' without a graph block");
      if (tokens.size() != 1) throw ParseError(src, lineno, "expected: end");
      try {
        if (blk.has_points) {
          ds.graphs.push_back(build_distance_graph(blk.points, blk.id, blk.cls));
          ds.points.push_back(std::move(blk.points));
        } else {
          ds.graphs.emplace_back(blk.id, std::move(blk.vlabels), std::move(blk.vattrs), blk.edges,
                                 std::move(blk.elabels), std::move(blk.eattrs), blk.cls);
          ds.points.emplace_back();
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(src, lineno, e.what());
      }
      open = false;
    } else {
      throw ParseError(src, lineno, "unknown directive '" + cmd + "'");
    }
  }
  if (open)
    throw ParseError(src, lineno, "unterminated graph block '" + blk.id + "' opened at line " +
                                      std::to_string(blk.opened_at));
  return ds;
}

Dataset parse_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  return parse_dataset(in, path);
}

AttributedGraph build_distance_graph(std::span<const LabeledPoint> points,
                                     std::string graph_id, std::string class_label) {
  const int n = static_cast<int>(points.size());
  std::vector<std::string> vlabels(n);
  for (int i = 0; i < n; ++i) {
    if (!points[i].position.allFinite())
      throw std::invalid_argument("build_distance_graph: point coordinates must be finite");
    vlabels[i] = points[i].label;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<Vector> eattrs;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
      Vector d(1);
      d(0) = (points[i].position - points[j].position).norm();
      eattrs.push_back(std::move(d));
    }
  }
  return AttributedGraph(std::move(graph_id), std::move(vlabels), {}, edges, {}, std::move(eattrs),
                         std::move(class_label));
}

}  // namespace gkern
