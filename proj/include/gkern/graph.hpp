#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkern/types.hpp"

namespace gkern {

// Simple undirected graph with a discrete label and a real-valued attribute
// vector on every vertex and edge. Vertices are dense indices 0..n-1.
// Immutable after construction. Adjacency is kept both as a canonical edge
// list (u < v) and as a dense boolean matrix, since product-graph
// construction probes adjacency Θ(n1²·n2²) times.
//
// Attribute vectors must have uniform length within one graph (separately for
// vertices and edges); zero-length means "no attributes".
class AttributedGraph {
 public:
  AttributedGraph() = default;  // the empty graph, legal input everywhere

  // vertex_attrs/edge_labels/edge_attrs may be passed empty as a shorthand
  // for "no attributes" / "all edge labels empty".
  AttributedGraph(std::string graph_id,
                  std::vector<std::string> vertex_labels,
                  std::vector<Vector> vertex_attrs,
                  const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> edge_labels,
                  std::vector<Vector> edge_attrs,
                  std::string class_label = {});

  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& graph_id() const { return graph_id_; }
  const std::string& class_label() const { return class_label_; }

  const std::string& vertex_label(int v) const { return vertex_labels_[v]; }
  const Vector& vertex_attr(int v) const { return vertex_attrs_[v]; }
  int vertex_attr_dim() const { return vertex_attr_dim_; }
  int edge_attr_dim() const { return edge_attr_dim_; }

  bool adjacent(int u, int v) const { return adj_(u, v); }

  // Canonical edge list, endpoints ordered u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Index into edges()/edge_label()/edge_attr(), or -1 when (u,v) is not an edge.
  int edge_index(int u, int v) const { return edge_index_(u, v); }

  const std::string& edge_label(int e) const { return edge_labels_[e]; }
  const Vector& edge_attr(int e) const { return edge_attrs_[e]; }

 private:
  std::string graph_id_;
  std::string class_label_;
  std::vector<std::string> vertex_labels_;
  std::vector<Vector> vertex_attrs_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> edge_labels_;
  std::vector<Vector> edge_attrs_;
  BoolMatrix adj_;
  IntMatrix edge_index_;
  int vertex_attr_dim_ = 0;
  int edge_attr_dim_ = 0;
};

// Vertices adjacent to v, ascending. Throws std::out_of_range for a bad index.
std::vector<int> neighbors(const AttributedGraph& g, int v);

// Subgraph induced by `subset` (distinct, in-range indices; order defines the
// new vertex numbering). Labels and attributes are copied.
AttributedGraph induced_subgraph(const AttributedGraph& g, std::span<const int> subset);

// True iff every vertex pair is joined by a path. The empty graph counts as
// connected by convention.
bool is_connected(const AttributedGraph& g);

// True iff every pair of distinct vertices is adjacent.
bool is_complete(const AttributedGraph& g);

}  // namespace gkern
