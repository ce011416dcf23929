#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gkern/graph.hpp"

namespace gkern {

// Scalar base kernels. All are symmetric and nonnegative; the parameterized
// ones reject c/sigma <= 0.
double dirac(const std::string& a, const std::string& b);
double triangular(double d1, double d2, double c);       // (1/c)·max(0, c-|d1-d2|)
double brownian_bridge(double x1, double x2, double c);  // max(0, c-|x1-x2|)
double gaussian_rbf(double d1, double d2, double sigma);

// Similarity of a vertex of one graph and a vertex of another. Evaluators
// must be symmetric under swapping the two graphs' roles and return finite
// nonnegative values; for the kernel theory to apply they must be positive
// semidefinite (caller's obligation for user-supplied evaluators).
struct VertexKernel {
  std::string name;
  std::function<double(const AttributedGraph&, int, const AttributedGraph&, int)> eval;

  double operator()(const AttributedGraph& g1, int v1, const AttributedGraph& g2, int v2) const {
    return eval(g1, v1, g2, v2);
  }
};

// Similarity of an ordered vertex pair of one graph and an ordered vertex
// pair of another. Must be invariant under reversing both pairs at once
// (undirected semantics). Kernels produced by edge_kernel_adapter() return 0
// whenever exactly one of the two pairs is an edge; kernels built directly
// from edge annotations (edge_label_dirac, edge_attr_*) may only be evaluated
// on pairs that are edges in their graphs.
struct EdgeKernel {
  std::string name;
  std::function<double(const AttributedGraph&, int, int, const AttributedGraph&, int, int)> eval;

  double operator()(const AttributedGraph& g1, int u1, int v1,
                    const AttributedGraph& g2, int u2, int v2) const {
    return eval(g1, u1, v1, g2, u2, v2);
  }
};

// Vertex kernels over labels / the first attribute slot.
VertexKernel vertex_label_dirac();
VertexKernel vertex_attr_triangular(double c);
VertexKernel vertex_attr_brownian(double c);
VertexKernel vertex_attr_rbf(double sigma);

// Pointwise product of the parts; rejects an empty list.
VertexKernel product_kernel(std::vector<VertexKernel> parts);

// Kernels on existing edges, over the edge label token / the first edge
// attribute slot (where distance-graph builders store the distance).
EdgeKernel edge_label_dirac();
EdgeKernel edge_attr_triangular(double c);
EdgeKernel edge_attr_brownian(double c);
EdgeKernel edge_attr_rbf(double sigma);

// Lifts a kernel defined on actual edges to arbitrary vertex pairs:
//   both pairs edges      -> on_edges(...)
//   neither pair an edge  -> d_weight (default 1; 0 ignores common non-adjacency)
//   exactly one an edge   -> 0
EdgeKernel edge_kernel_adapter(EdgeKernel on_edges, double d_weight = 1.0);

// Kernel spec mini-language:
//   dirac | triangular:c=0.25 | brownian:c=3 | rbf:sigma=1.0
//   product(dirac,brownian:c=3)
// parse_edge_base_kernel yields the on-edges kernel named by the spec;
// parse_edge_kernel wraps it in the adapter.
VertexKernel parse_vertex_kernel(std::string_view spec);
EdgeKernel parse_edge_base_kernel(std::string_view spec);
EdgeKernel parse_edge_kernel(std::string_view spec, double d_weight = 1.0);

}  // namespace gkern
