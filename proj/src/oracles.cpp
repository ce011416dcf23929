#include "gkern/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gkern/graph.hpp"

namespace gkern::oracle {

namespace {

constexpr int kMaxOracleVertices = 8;
constexpr int kMaxOraclePoints = 7;

void check_size(const AttributedGraph& g) {
  if (g.vertex_count() > kMaxOracleVertices)
    throw std::invalid_argument("oracle size guard: graph '" + g.graph_id() + "' has more than " +
                                std::to_string(kMaxOracleVertices) + " vertices");
}

// All index subsets of {0..n-1} of the given size, in lexicographic order.
void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  if (size > n) return;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool labels_match(const AttributedGraph& g1, const AttributedGraph& g2,
                  std::span<const int> dom, std::span<const int> img) {
  const int s = static_cast<int>(dom.size());
  for (int i = 0; i < s; ++i)
    if (g1.vertex_label(dom[i]) != g2.vertex_label(img[i])) return false;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const int e1 = g1.edge_index(dom[i], dom[j]);
      const int e2 = g2.edge_index(img[i], img[j]);
      if ((e1 >= 0) != (e2 >= 0)) return false;
      if (e1 >= 0 && g1.edge_label(e1) != g2.edge_label(e2)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_csi(const AttributedGraph& g1, const AttributedGraph& g2, const Bijection& phi) {
  std::vector<int> dom, img;
  for (const auto& [a, b] : phi) {
    if (a < 0 || a >= g1.vertex_count() || b < 0 || b >= g2.vertex_count()) return false;
    dom.push_back(a);
    img.push_back(b);
  }
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = i + 1; j < dom.size(); ++j)
      if (dom[i] == dom[j] || img[i] == img[j]) return false;
  return labels_match(g1, g2, dom, img);
}

double brute_force_sm(const AttributedGraph& g1, const AttributedGraph& g2,
                      const VertexKernel& kv, const EdgeKernel& ke,
                      const WeightFunction& weight, int max_size, bool connected_only) {
  check_size(g1);
  check_size(g2);
  if (max_size < 1) throw std::invalid_argument("brute_force_sm: max_size must be >= 1");

  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  double total = 0.0;

  std::vector<std::pair<int, int>> matching;
  for (int s = 1; s <= std::min({max_size, n1, n2}); ++s) {
    for_each_subset(n1, s, [&](const std::vector<int>& dom) {
      if (connected_only && !is_connected(induced_subgraph(g1, dom))) return;
      for_each_subset(n2, s, [&](const std::vector<int>& img_base) {
        std::vector<int> img = img_base;
        std::sort(img.begin(), img.end());
        do {
          double score = 1.0;
          for (int i = 0; i < s; ++i) score *= kv(g1, dom[i], g2, img[i]);
          for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
              score *= ke(g1, dom[i], dom[j], g2, img[i], img[j]);
          if (score != 0.0) {
            matching.clear();
            for (int i = 0; i < s; ++i) matching.emplace_back(dom[i], img[i]);
            total += weight(g1, g2, matching) * score;
          }
        } while (std::next_permutation(img.begin(), img.end()));
      });
    });
  }
  return total;
}

int automorphism_count(const AttributedGraph& g) {
  check_size(g);
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> identity = perm;
  int count = 0;
  do {
    if (labels_match(g, g, identity, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

bool are_isomorphic(const AttributedGraph& a, const AttributedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> dom(n), img(n);
  std::iota(dom.begin(), dom.end(), 0);
  std::iota(img.begin(), img.end(), 0);
  do {
    if (labels_match(a, b, dom, img)) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

}  // namespace

double brute_force_subgraph_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                                   const Vector& lambda_s, int max_size) {
  check_size(g1);
  check_size(g2);
  if (max_size < 1) throw std::invalid_argument("brute_force_subgraph_kernel: max_size must be >= 1");

  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  double total = 0.0;
  for (int s = 1; s <= std::min({max_size, n1, n2}); ++s) {
    const double ls = s <= lambda_s.size() ? lambda_s(s - 1) : 0.0;
    if (ls == 0.0) continue;
    std::vector<AttributedGraph> subs2;
    for_each_subset(n2, s, [&](const std::vector<int>& sub) {
      subs2.push_back(induced_subgraph(g2, sub));
    });
    for_each_subset(n1, s, [&](const std::vector<int>& sub) {
      const AttributedGraph sg1 = induced_subgraph(g1, sub);
      for (const AttributedGraph& sg2 : subs2)
        if (are_isomorphic(sg1, sg2)) total += ls;
    });
  }
  return total;
}

double brute_force_pharmacophore(std::span<const LabeledPoint> m1, std::span<const LabeledPoint> m2,
                                 const std::function<double(const std::string&, const std::string&)>& k_feat,
                                 const std::function<double(double, double)>& k_dist) {
  if (static_cast<int>(m1.size()) > kMaxOraclePoints || static_cast<int>(m2.size()) > kMaxOraclePoints)
    throw std::invalid_argument("oracle size guard: point sets are limited to " +
                                std::to_string(kMaxOraclePoints) + " points");

  const int n1 = static_cast<int>(m1.size());
  const int n2 = static_cast<int>(m2.size());
  double total = 0.0;
  int p[3], q[3];
  for (p[0] = 0; p[0] < n1; ++p[0])
    for (p[1] = 0; p[1] < n1; ++p[1])
      for (p[2] = 0; p[2] < n1; ++p[2]) {
        if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) continue;
        for (q[0] = 0; q[0] < n2; ++q[0])
          for (q[1] = 0; q[1] < n2; ++q[1])
            for (q[2] = 0; q[2] < n2; ++q[2]) {
              if (q[0] == q[1] || q[0] == q[2] || q[1] == q[2]) continue;
              double ki = 1.0, ks = 1.0;
              for (int i = 0; i < 3; ++i) {
                ki *= k_feat(m1[p[i]].label, m2[q[i]].label);
                const double d1 = (m1[p[i]].position - m1[p[(i + 1) % 3]].position).norm();
                const double d2 = (m2[q[i]].position - m2[q[(i + 1) % 3]].position).norm();
                ks *= k_dist(d1, d2);
              }
              total += ki * ks;
            }
      }
  return total;
}

}  // namespace gkern::oracle
