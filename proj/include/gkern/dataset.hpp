#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkern/graph.hpp"

namespace gkern {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An ordered collection of graphs with unique ids. For graphs declared as
// point blocks the raw point set is retained alongside the distance graph
// (points[i] is empty for v/e blocks).
struct Dataset {
  std::vector<AttributedGraph> graphs;
  std::vector<std::vector<LabeledPoint>> points;
};

// Line-oriented dataset format (UTF-8, lines starting with '#' are comments):
//
//   graph <id> [<class>]
//   v <index> <label> [<real>...]      # indices consecutive from 0
//   e <u> <v> <label> [<real>...]      # undirected; endpoints already declared
//   end
//
// A block may instead hold labeled 3d points, which are turned into a
// complete distance graph:
//
//   graph <id> [<class>]
//   point <label> <x> <y> <z>
//   end
//
// Violations (dangling endpoints, duplicate edges, mixed attribute arity,
// duplicate ids, ...) raise ParseError with the offending line number.
Dataset parse_dataset(std::istream& in, const std::string& source_name);
Dataset parse_dataset(const std::string& path);

// Complete graph over the points: vertex labels are the feature labels and
// every edge carries one real attribute, the Euclidean distance between its
// endpoints. Rejects non-finite coordinates.
AttributedGraph build_distance_graph(std::span<const LabeledPoint> points,
                                     std::string graph_id = {}, std::string class_label = {});

}  // namespace gkern
