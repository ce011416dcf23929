#pragma once

// Shared helpers for the test suites: small graph builders and deterministic
// random generators for graphs, attributes and point sets.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gkern/dataset.hpp"
#include "gkern/graph.hpp"

namespace testutil {

inline gkern::AttributedGraph make_graph(const std::string& id, int n,
                                         const std::vector<std::pair<int, int>>& edges,
                                         std::vector<std::string> vlabels = {},
                                         std::vector<std::string> elabels = {}) {
  if (vlabels.empty()) vlabels.assign(n, "a");
  return gkern::AttributedGraph(id, std::move(vlabels), {}, edges, std::move(elabels), {});
}

inline gkern::AttributedGraph complete_graph(const std::string& id, int n,
                                             std::vector<std::string> vlabels = {}) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(id, n, edges, std::move(vlabels));
}

inline gkern::AttributedGraph path_graph(const std::string& id, int n,
                                         std::vector<std::string> vlabels = {}) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(id, n, edges, std::move(vlabels));
}

// Labeled Erdős–Rényi style graph: vertex and edge labels from a small
// alphabet, no attributes.
inline gkern::AttributedGraph random_labeled_graph(std::mt19937& rng, int n, double density,
                                                   int n_labels, const std::string& id) {
  static const char* alphabet[] = {"a", "b", "c", "d", "e"};
  std::uniform_int_distribution<int> label(0, n_labels - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> vlabels(n);
  for (int i = 0; i < n; ++i) vlabels[i] = alphabet[label(rng)];
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> elabels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < density) {
        edges.emplace_back(i, j);
        elabels.push_back(alphabet[label(rng)]);
      }
    }
  }
  return gkern::AttributedGraph(id, std::move(vlabels), {}, edges, std::move(elabels), {});
}

// Random graph with one real vertex attribute in [0,2] and one real edge
// attribute ("distance") in [0,1]; uniform labels.
inline gkern::AttributedGraph random_attributed_graph(std::mt19937& rng, int n, double density,
                                                      const std::string& id) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> vattr(0.0, 2.0);
  std::uniform_real_distribution<double> eattr(0.0, 1.0);
  std::vector<std::string> vlabels(n, "x");
  std::vector<gkern::Vector> vattrs(n);
  for (int i = 0; i < n; ++i) {
    vattrs[i] = gkern::Vector(1);
    vattrs[i](0) = vattr(rng);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<gkern::Vector> eattrs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < density) {
        edges.emplace_back(i, j);
        gkern::Vector a(1);
        a(0) = eattr(rng);
        eattrs.push_back(std::move(a));
      }
    }
  }
  return gkern::AttributedGraph(id, std::move(vlabels), std::move(vattrs), edges, {},
                                std::move(eattrs));
}

inline std::vector<gkern::LabeledPoint> random_points(std::mt19937& rng, int n, int n_labels) {
  static const char* alphabet[] = {"p", "q", "r"};
  std::uniform_int_distribution<int> label(0, n_labels - 1);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<gkern::LabeledPoint> pts(n);
  for (int i = 0; i < n; ++i) {
    pts[i].label = alphabet[label(rng)];
    pts[i].position = gkern::Vec3(coord(rng), coord(rng), coord(rng));
  }
  return pts;
}

inline std::vector<gkern::LabeledPoint> equilateral_triangle(const std::string& label) {
  return {{gkern::Vec3(0, 0, 0), label},
          {gkern::Vec3(1, 0, 0), label},
          {gkern::Vec3(0.5, std::sqrt(3.0) / 2.0, 0), label}};
}

}  // namespace testutil
