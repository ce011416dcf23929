#include "gkern/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gkern {

AttributedGraph::AttributedGraph(std::string graph_id,
                                 std::vector<std::string> vertex_labels,
                                 std::vector<Vector> vertex_attrs,
                                 const std::vector<std::pair<int, int>>& edges,
                                 std::vector<std::string> edge_labels,
                                 std::vector<Vector> edge_attrs,
                                 std::string class_label)
    : graph_id_(std::move(graph_id)),
      class_label_(std::move(class_label)),
      vertex_labels_(std::move(vertex_labels)),
      vertex_attrs_(std::move(vertex_attrs)),
      edge_labels_(std::move(edge_labels)),
      edge_attrs_(std::move(edge_attrs)) {
  const int n = vertex_count();
  const int m = static_cast<int>(edges.size());

  if (vertex_attrs_.empty()) vertex_attrs_.assign(n, Vector());
  if (static_cast<int>(vertex_attrs_.size()) != n)
    throw std::invalid_argument("graph '" + graph_id_ + "': vertex attribute count != vertex count");
  vertex_attr_dim_ = n > 0 ? static_cast<int>(vertex_attrs_[0].size()) : 0;
  for (const Vector& a : vertex_attrs_)
    if (a.size() != vertex_attr_dim_)
      throw std::invalid_argument("graph '" + graph_id_ + "': vertex attribute vectors have mixed lengths");

  if (edge_labels_.empty()) edge_labels_.assign(m, std::string());
  if (static_cast<int>(edge_labels_.size()) != m)
    throw std::invalid_argument("graph '" + graph_id_ + "': edge label count != edge count");
  if (edge_attrs_.empty()) edge_attrs_.assign(m, Vector());
  if (static_cast<int>(edge_attrs_.size()) != m)
    throw std::invalid_argument("graph '" + graph_id_ + "': edge attribute count != edge count");
  edge_attr_dim_ = m > 0 ? static_cast<int>(edge_attrs_[0].size()) : 0;
  for (const Vector& a : edge_attrs_)
    if (a.size() != edge_attr_dim_)
      throw std::invalid_argument("graph '" + graph_id_ + "': edge attribute vectors have mixed lengths");

  adj_ = BoolMatrix::Constant(n, n, false);
  edge_index_ = IntMatrix::Constant(n, n, -1);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph '" + graph_id_ + "': edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("graph '" + graph_id_ + "': self-loops are not allowed");
    if (adj_(u, v))
      throw std::invalid_argument("graph '" + graph_id_ + "': parallel edge");
    const int idx = static_cast<int>(edges_.size());
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    adj_(u, v) = adj_(v, u) = true;
    edge_index_(u, v) = edge_index_(v, u) = idx;
  }
}

std::vector<int> neighbors(const AttributedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("neighbors: vertex index out of range");
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (g.adjacent(v, u)) out.push_back(u);
  return out;
}

AttributedGraph induced_subgraph(const AttributedGraph& g, std::span<const int> subset) {
  std::unordered_set<int> seen;
  for (int v : subset) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_subgraph: vertex index out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("induced_subgraph: duplicate vertex index");
  }

  const int k = static_cast<int>(subset.size());
  std::vector<std::string> vlabels(k);
  std::vector<Vector> vattrs(k);
  for (int i = 0; i < k; ++i) {
    vlabels[i] = g.vertex_label(subset[i]);
    vattrs[i] = g.vertex_attr(subset[i]);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> elabels;
  std::vector<Vector> eattrs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int e = g.edge_index(subset[i], subset[j]);
      if (e < 0) continue;
      edges.emplace_back(i, j);
      elabels.push_back(g.edge_label(e));
      eattrs.push_back(g.edge_attr(e));
    }
  }
  return AttributedGraph(g.graph_id(), std::move(vlabels), std::move(vattrs), edges,
                         std::move(elabels), std::move(eattrs), g.class_label());
}

bool is_connected(const AttributedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (g.adjacent(v, u) && !visited[u]) {
        visited[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool is_complete(const AttributedGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) return false;
  return true;
}

}  // namespace gkern
