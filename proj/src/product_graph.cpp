#include "gkern/product_graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gkern {

WeightedProductGraph build_wpg(const AttributedGraph& g1, const AttributedGraph& g2,
                               const VertexKernel& kv, const EdgeKernel& ke) {
  if (!kv.eval || !ke.eval)
    throw std::invalid_argument("build_wpg: vertex and edge kernels must be set");

  WeightedProductGraph p;
  p.g1_ = &g1;
  p.g2_ = &g2;

  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();

#ifndef NDEBUG
  // Spot-check the caller's symmetry obligation on a few pairs.
  for (int v = 0; v < std::min({n1, n2, 2}); ++v)
    assert(kv(g1, v, g2, v) == kv(g2, v, g1, v));
#endif

  std::vector<double> weights;
  for (int v1 = 0; v1 < n1; ++v1) {
    for (int v2 = 0; v2 < n2; ++v2) {
      const double w = kv(g1, v1, g2, v2);
      if (w > 0.0) {
        p.vertices_.emplace_back(v1, v2);
        weights.push_back(w);
      }
    }
  }

  const int np = p.size();
  p.vertex_weights_.resize(np);
  for (int i = 0; i < np; ++i) p.vertex_weights_(i) = weights[i];
  p.edge_weights_ = Matrix::Zero(np, np);
  p.classes_.setZero(np, np);

  for (int i = 0; i < np; ++i) {
    const auto [u1, u2] = p.vertices_[i];
    for (int j = i + 1; j < np; ++j) {
      const auto [v1, v2] = p.vertices_[j];
      if (u1 == v1 || u2 == v2) continue;
      const double w = ke(g1, u1, v1, g2, u2, v2);
      const bool e1 = g1.adjacent(u1, v1);
      const bool e2 = g2.adjacent(u2, v2);
      // c/d classification is only well-defined when κ_E vanishes on mixed
      // adjacency (the adapter guarantees this).
      assert(e1 == e2 || w == 0.0);
      if (w > 0.0) {
        p.edge_weights_(i, j) = p.edge_weights_(j, i) = w;
        const auto cls = (e1 && e2) ? EdgeClass::C : EdgeClass::D;
        p.classes_(i, j) = p.classes_(j, i) = static_cast<std::uint8_t>(cls);
        ++p.edge_count_;
      }
    }
  }
  return p;
}

std::vector<int> c_neighbors(const WeightedProductGraph& p, int v) {
  if (v < 0 || v >= p.size())
    throw std::out_of_range("c_neighbors: product vertex index out of range");
  std::vector<int> out;
  for (int u = 0; u < p.size(); ++u)
    if (p.edge_class(v, u) == EdgeClass::C) out.push_back(u);
  return out;
}

void write_wpg_edges(const WeightedProductGraph& p, std::ostream& os) {
  char buf[32];
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!p.adjacent(i, j)) continue;
      std::snprintf(buf, sizeof(buf), "%.17g", p.edge_weight(i, j));
      os << i << ' ' << j << ' ' << buf << ' '
         << (p.edge_class(i, j) == EdgeClass::C ? 'C' : 'D') << '\n';
    }
  }
}

}  // namespace gkern
