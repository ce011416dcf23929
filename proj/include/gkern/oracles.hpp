#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkern/matching.hpp"

namespace gkern::oracle {

// Slow, obviously-correct implementations of the kernels' declarative
// definitions, used to validate the product-graph engine. All are guarded
// against combinatorial blowup (graphs <= 8 vertices, point sets <= 7) and
// throw std::invalid_argument beyond that.
//
// Isomorphism here preserves adjacency and the discrete labels (vertex and
// edge tokens); real-valued attributes are the kernels' domain, not identity.

// Partial vertex mapping g1 -> g2, injective in both coordinates.
using Bijection = std::vector<std::pair<int, int>>;

// True iff phi is a common subgraph isomorphism: injective both ways and
// label/adjacency preserving between the induced subgraphs.
bool is_csi(const AttributedGraph& g1, const AttributedGraph& g2, const Bijection& phi);

// Direct sum over every nonempty bijection of size <= max_size between
// vertex subsets, scored as λ(φ)·Π κ_V·Π κ_E with each unordered domain pair
// scored once. connected_only keeps only domains inducing a connected
// subgraph of g1.
double brute_force_sm(const AttributedGraph& g1, const AttributedGraph& g2,
                      const VertexKernel& kv, const EdgeKernel& ke,
                      const WeightFunction& weight, int max_size, bool connected_only);

// Number of label- and adjacency-preserving permutations of V(g), by
// exhaustive check; >= 1 (the identity).
int automorphism_count(const AttributedGraph& g);

// Σ over ordered pairs of nonempty induced subgraphs of size <= max_size of
// lambda_s[|G'1|-1]·[G'1 isomorphic to G'2].
double brute_force_subgraph_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                                   const Vector& lambda_s, int max_size);

// Direct triple sum over ordered triples of distinct points, comparing
// feature labels and the three cyclic pairwise distances.
double brute_force_pharmacophore(std::span<const LabeledPoint> m1, std::span<const LabeledPoint> m2,
                                 const std::function<double(const std::string&, const std::string&)>& k_feat,
                                 const std::function<double(double, double)>& k_dist);

}  // namespace gkern::oracle
