#pragma once

#include <string>
#include <vector>

#include "gkern/dataset.hpp"
#include "gkern/matching.hpp"

namespace gkern {

// Symmetric matrix of pairwise kernel values. For size-based weight
// configurations the raw per-size sums (before λ) are kept as a stack of
// matrices so kernel values can be re-normalized per feature size;
// size_weights then holds the λ value for each size.
struct GramMatrix {
  std::vector<std::string> ids;
  Matrix values;
  std::vector<Matrix> per_size;
  Vector size_weights;
};

enum class KernelMode { SM, CSM, CSI, Subgraph, Pharmacophore };

struct GramConfig {
  KernelMode mode = KernelMode::SM;
  int max_size = 3;
  VertexKernel vertex_kernel;  // used by SM/CSM (κ_V) and Pharmacophore (feature kernel)
  EdgeKernel edge_kernel;      // SM/CSM: full κ_E; Pharmacophore: on-edges distance kernel
  Vector weights;              // per-size λ (SM/CSM/CSI) or λ_s (Subgraph); empty = uniform
  int threads = 1;
};

// Kernel values for every unordered pair of dataset graphs, each computed
// once and mirrored. Pairs are distributed over cfg.threads workers; the
// result does not depend on the worker count. Kernel errors are rethrown
// with the offending pair's ids attached.
GramMatrix compute_gram(const Dataset& data, const GramConfig& cfg);

enum class NormalizeMode { None, Cosine, PerSize };

// none:     the input, unchanged.
// cosine:   k̂(i,j) = k(i,j)/sqrt(k(i,i)·k(j,j)), 0 when either diagonal is 0.
// per-size: cosine-normalize each per-size matrix, then sum them scaled by
//           the size weights; requires the per-size stack.
GramMatrix normalize_gram(const GramMatrix& m, NormalizeMode mode);

// Smallest eigenvalue of the symmetrized matrix.
double min_eigenvalue(const Matrix& m);

// Text format: header "# ids: id1,id2,...", then one comma-separated row per
// line with 17 significant digits (round-trips doubles exactly).
void write_gram(const GramMatrix& m, const std::string& path);
GramMatrix read_gram(const std::string& path);

}  // namespace gkern
