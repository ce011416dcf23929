#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "gkern/product_graph.hpp"

namespace gkern {

// Weight λ of a matching. A matching is the list of (vertex of G1, vertex of
// G2) pairs of the current clique; evaluators see both source graphs so
// weights may inspect the matched subgraphs. Weights that depend only on the
// matching size expose a fast path (size_based()): the engine then scales
// per-size totals after enumeration instead of calling out per clique.
class WeightFunction {
 public:
  using Evaluator = std::function<double(
      const AttributedGraph& g1, const AttributedGraph& g2,
      std::span<const std::pair<int, int>> matching)>;

  WeightFunction();  // uniform

  static WeightFunction uniform();                // λ ≡ 1 for every size
  static WeightFunction per_size(Vector weights); // λ = weights[|φ|-1], 0 past the end
  static WeightFunction pharmacophore();          // 6 at size 3, 0 otherwise

  // λ(φ) = size_weights[|φ|-1] / |Aut(G1[dom φ])|. Memoizes automorphism
  // counts per (graph, domain); the graphs must outlive the instance.
  static WeightFunction automorphism_corrected(Vector size_weights);

  static WeightFunction general(std::string name, Evaluator eval);

  bool size_based() const { return size_based_; }
  double size_weight(int size) const;  // only meaningful when size_based()

  double operator()(const AttributedGraph& g1, const AttributedGraph& g2,
                    std::span<const std::pair<int, int>> matching) const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  bool size_based_ = false;
  bool uniform_ = false;
  Vector size_weights_;
  Evaluator eval_;
};

struct MatchingOptions {
  int max_size = 3;             // cap k on the matching size, k >= 1
  bool connected_only = false;  // restrict to c-cliques (connected matchings)
  WeightFunction weight;        // defaults to uniform
};

struct KernelResult {
  double total = 0.0;
  Vector per_size_raw;       // [s-1]: Σ of size-s clique weights, before λ
  Vector per_size_weighted;  // [s-1]: the same with λ applied
  std::int64_t cliques_visited = 0;
};

// Weighted clique enumeration over the product graph: every clique of size
// 1..k contributes λ(C)·Π c(v)·Π c(e), each clique-internal edge multiplied
// exactly once. With connected_only, a vertex may enter the clique only when
// it is joined to the current clique by at least one c-edge (size-1 cliques
// count as connected). Candidates are visited in ascending index order and
// removed once their extensions are exhausted, so every clique is visited
// exactly once.
KernelResult smkernel(const WeightedProductGraph& p, const MatchingOptions& opts);

// The same kernel under Dirac vertex/edge kernels (d-weight 1): counts the
// common subgraph isomorphisms of the two labeled graphs, weighted by λ.
KernelResult csi_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                        const WeightFunction& weight, int max_size, bool connected_only);

// Number of isomorphic induced-subgraph pairs of size 1..k, each size-s pair
// weighted by lambda_s[s-1] (0 past the end). Internally corrects the CSI
// count of each clique by |Aut| of the subgraph induced in g1; the sums are
// kept integral so integer-valued weights give exact results.
double subgraph_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                       const Vector& lambda_s, int max_size);

KernelResult pharmacophore_kernel_result(const AttributedGraph& g1, const AttributedGraph& g2,
                                         const VertexKernel& k_feat, const EdgeKernel& k_dist);

// Kernel over labeled 3d point sets represented as complete distance graphs
// (see build_distance_graph): feature kernel on vertices, distance kernel on
// edges, weight 6 at size 3. Rejects non-complete inputs.
double pharmacophore_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                            const VertexKernel& k_feat, const EdgeKernel& k_dist);

// Σ_{i=0}^{k} i!·binom(n1,i)·binom(n2,i): upper bound on the number of
// cliques of size up to k in the product graph, including the empty clique.
// Throws std::overflow_error when the exact value exceeds int64.
std::int64_t clique_count_bound(int n1, int n2, int k);

}  // namespace gkern
