#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gkern/kernels.hpp"

namespace gkern {

// Product edges are classified by the adjacency of the underlying pairs:
// C-edges record common adjacency (edges in both factor graphs), D-edges
// common non-adjacency. The mixed case carries kernel value 0 under the
// adapter semantics and is never stored.
enum class EdgeClass : std::uint8_t { None = 0, C, D };

// Weighted (modular) product graph of two attributed graphs: vertices are
// the pairs (v1,v2) with κ_V(v1,v2) > 0, weighted by κ_V; edges join pairs
// with distinct coordinates and κ_E > 0, weighted by κ_E. Holds non-owning
// references to the factor graphs, which must outlive it.
class WeightedProductGraph {
 public:
  int size() const { return static_cast<int>(vertices_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  std::pair<int, int> vertex(int i) const { return vertices_[i]; }
  double vertex_weight(int i) const { return vertex_weights_(i); }

  bool adjacent(int i, int j) const { return classes_(i, j) != static_cast<std::uint8_t>(EdgeClass::None); }
  double edge_weight(int i, int j) const { return edge_weights_(i, j); }
  EdgeClass edge_class(int i, int j) const { return static_cast<EdgeClass>(classes_(i, j)); }

  const AttributedGraph& g1() const { return *g1_; }
  const AttributedGraph& g2() const { return *g2_; }

 private:
  friend WeightedProductGraph build_wpg(const AttributedGraph&, const AttributedGraph&,
                                        const VertexKernel&, const EdgeKernel&);
  std::vector<std::pair<int, int>> vertices_;
  Vector vertex_weights_;
  Matrix edge_weights_;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> classes_;
  std::int64_t edge_count_ = 0;
  const AttributedGraph* g1_ = nullptr;
  const AttributedGraph* g2_ = nullptr;
};

// κ_E is evaluated once per unordered product-vertex pair in the canonical
// orientation ((u1,v1),(u2,v2)); the edge kernel's reversal invariance makes
// the orientation immaterial.
WeightedProductGraph build_wpg(const AttributedGraph& g1, const AttributedGraph& g2,
                               const VertexKernel& kv, const EdgeKernel& ke);

// Neighbors of v reachable via C-edges only, ascending.
std::vector<int> c_neighbors(const WeightedProductGraph& p, int v);

// Debug dump, one edge per line: "u v weight class".
void write_wpg_edges(const WeightedProductGraph& p, std::ostream& os);

}  // namespace gkern
