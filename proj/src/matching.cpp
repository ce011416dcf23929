#include "gkern/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gkern/oracles.hpp"

namespace gkern {

// ---- WeightFunction --------------------------------------------------------

WeightFunction::WeightFunction() : name_("uniform"), size_based_(true), uniform_(true) {}

WeightFunction WeightFunction::uniform() { return WeightFunction(); }

WeightFunction WeightFunction::per_size(Vector weights) {
  for (Eigen::Index i = 0; i < weights.size(); ++i)
    if (!(weights(i) >= 0.0) || !std::isfinite(weights(i)))
      throw std::invalid_argument("per-size weights must be finite and nonnegative");
  WeightFunction w;
  w.name_ = "per_size";
  w.size_based_ = true;
  w.uniform_ = false;
  w.size_weights_ = std::move(weights);
  return w;
}

WeightFunction WeightFunction::pharmacophore() {
  Vector w = Vector::Zero(3);
  w(2) = 6.0;
  WeightFunction f = per_size(std::move(w));
  f.name_ = "pharmacophore";
  return f;
}

WeightFunction WeightFunction::general(std::string name, Evaluator eval) {
  if (!eval) throw std::invalid_argument("general weight function: evaluator must be set");
  WeightFunction w;
  w.name_ = std::move(name);
  w.size_based_ = false;
  w.uniform_ = false;
  w.eval_ = std::move(eval);
  return w;
}

WeightFunction WeightFunction::automorphism_corrected(Vector size_weights) {
  struct Memo {
    std::mutex mu;
    std::map<std::pair<const AttributedGraph*, std::vector<int>>, double> counts;
  };
  auto memo = std::make_shared<Memo>();
  auto lambda_s = std::make_shared<Vector>(std::move(size_weights));
  return general("automorphism_corrected",
                 [memo, lambda_s](const AttributedGraph& g1, const AttributedGraph&,
                                  std::span<const std::pair<int, int>> matching) {
                   const int s = static_cast<int>(matching.size());
                   const double ls = s <= lambda_s->size() ? (*lambda_s)(s - 1) : 0.0;
                   if (ls == 0.0) return 0.0;
                   std::vector<int> dom;
                   dom.reserve(matching.size());
                   for (const auto& pr : matching) dom.push_back(pr.first);
                   std::sort(dom.begin(), dom.end());
                   const auto key = std::make_pair(&g1, dom);
                   {
                     std::lock_guard<std::mutex> lock(memo->mu);
                     auto it = memo->counts.find(key);
                     if (it != memo->counts.end()) return ls / it->second;
                   }
                   const double aut = oracle::automorphism_count(induced_subgraph(g1, dom));
                   std::lock_guard<std::mutex> lock(memo->mu);
                   memo->counts.emplace(key, aut);
                   return ls / aut;
                 });
}

double WeightFunction::size_weight(int size) const {
  if (uniform_) return 1.0;
  return size >= 1 && size <= size_weights_.size() ? size_weights_(size - 1) : 0.0;
}

double WeightFunction::operator()(const AttributedGraph& g1, const AttributedGraph& g2,
                                  std::span<const std::pair<int, int>> matching) const {
  if (size_based_) return size_weight(static_cast<int>(matching.size()));
  return eval_(g1, g2, matching);
}

// ---- clique enumeration ----------------------------------------------------

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const WeightedProductGraph& p, const MatchingOptions& opts, KernelResult& res)
      : p_(p), opts_(opts), res_(res), size_based_(opts.weight.size_based()) {}

  void run() {
    std::vector<int> candidates(p_.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    clique_.reserve(opts_.max_size);
    extend(candidates, 1.0);
  }

 private:
  // Candidates are visited ascending; a vertex is dropped from the pool only
  // after its extensions are exhausted, while candidates skipped by the
  // c-reachability test stay available for deeper levels.
  void extend(const std::vector<int>& candidates, double clique_weight) {
    std::vector<char> removed(candidates.size(), 0);
    for (size_t i = 0; i < candidates.size(); ++i) {
      const int v = candidates[i];
      if (opts_.connected_only && !clique_.empty() && !c_adjacent_to_clique(v)) continue;

      double w = clique_weight * p_.vertex_weight(v);
      for (const int u : clique_) w *= p_.edge_weight(u, v);

      clique_.push_back(v);
      const int s = static_cast<int>(clique_.size());
      ++res_.cliques_visited;
      res_.per_size_raw(s - 1) += w;
      if (!size_based_) res_.per_size_weighted(s - 1) += evaluate_weight() * w;

      if (s < opts_.max_size) {
        std::vector<int> next;
        next.reserve(candidates.size());
        for (size_t j = 0; j < candidates.size(); ++j)
          if (!removed[j] && p_.adjacent(candidates[j], v)) next.push_back(candidates[j]);
        if (!next.empty()) extend(next, w);
      }
      clique_.pop_back();
      removed[i] = 1;
    }
  }

  bool c_adjacent_to_clique(int v) const {
    for (const int u : clique_)
      if (p_.edge_class(u, v) == EdgeClass::C) return true;
    return false;
  }

  double evaluate_weight() {
    matching_.clear();
    for (const int v : clique_) matching_.push_back(p_.vertex(v));
    return opts_.weight(p_.g1(), p_.g2(), matching_);
  }

  const WeightedProductGraph& p_;
  const MatchingOptions& opts_;
  KernelResult& res_;
  const bool size_based_;
  std::vector<int> clique_;
  std::vector<std::pair<int, int>> matching_;
};

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

KernelResult smkernel(const WeightedProductGraph& p, const MatchingOptions& opts) {
  if (opts.max_size < 1) throw std::invalid_argument("smkernel: max_size must be >= 1");

  KernelResult res;
  res.per_size_raw = Vector::Zero(opts.max_size);
  res.per_size_weighted = Vector::Zero(opts.max_size);

  CliqueEnumerator(p, opts, res).run();

  if (opts.weight.size_based())
    for (int s = 1; s <= opts.max_size; ++s)
      res.per_size_weighted(s - 1) = opts.weight.size_weight(s) * res.per_size_raw(s - 1);
  res.total = res.per_size_weighted.sum();
  return res;
}

KernelResult csi_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                        const WeightFunction& weight, int max_size, bool connected_only) {
  const WeightedProductGraph p =
      build_wpg(g1, g2, vertex_label_dirac(), edge_kernel_adapter(edge_label_dirac()));
  return smkernel(p, {max_size, connected_only, weight});
}

double subgraph_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                       const Vector& lambda_s, int max_size) {
  if (max_size < 1) throw std::invalid_argument("subgraph_kernel: max_size must be >= 1");

  // Per clique use s!/|Aut(G1[dom])| — an integer, since Aut is a subgroup of
  // the symmetric group on s elements — and fold λ_s/s! in afterwards. The
  // enumeration sums then stay integral and exact for integer λ_s.
  auto memo = std::make_shared<std::map<std::vector<int>, double>>();
  WeightFunction w = WeightFunction::general(
      "aut_scaled", [memo](const AttributedGraph& ga, const AttributedGraph&,
                           std::span<const std::pair<int, int>> matching) {
        std::vector<int> dom;
        dom.reserve(matching.size());
        for (const auto& pr : matching) dom.push_back(pr.first);
        std::sort(dom.begin(), dom.end());
        if (auto it = memo->find(dom); it != memo->end()) return it->second;
        const double value = static_cast<double>(factorial(static_cast<int>(dom.size()))) /
                             oracle::automorphism_count(induced_subgraph(ga, dom));
        memo->emplace(std::move(dom), value);
        return value;
      });

  const KernelResult r = csi_kernel(g1, g2, w, max_size, false);
  double total = 0.0;
  for (int s = 1; s <= max_size; ++s) {
    const double ls = s <= lambda_s.size() ? lambda_s(s - 1) : 0.0;
    if (ls != 0.0) total += ls * (r.per_size_weighted(s - 1) / factorial(s));
  }
  return total;
}

KernelResult pharmacophore_kernel_result(const AttributedGraph& g1, const AttributedGraph& g2,
                                         const VertexKernel& k_feat, const EdgeKernel& k_dist) {
  if (!is_complete(g1) || !is_complete(g2))
    throw std::invalid_argument("pharmacophore kernel requires complete distance graphs");
  const WeightedProductGraph p = build_wpg(g1, g2, k_feat, edge_kernel_adapter(k_dist));
  return smkernel(p, {3, false, WeightFunction::pharmacophore()});
}

double pharmacophore_kernel(const AttributedGraph& g1, const AttributedGraph& g2,
                            const VertexKernel& k_feat, const EdgeKernel& k_dist) {
  return pharmacophore_kernel_result(g1, g2, k_feat, k_dist).total;
}

std::int64_t clique_count_bound(int n1, int n2, int k) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("clique_count_bound: negative vertex count");
  if (k < 1) throw std::invalid_argument("clique_count_bound: k must be >= 1");

  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(INT64_MAX);
  const auto checked_mul = [](unsigned __int128 a, unsigned __int128 b) {
    if (b != 0 && a > (~static_cast<unsigned __int128>(0)) / b)
      throw std::overflow_error("clique_count_bound exceeds int64");
    return a * b;
  };
  const auto binom = [&](int n, int i) {
    unsigned __int128 b = 1;
    for (int t = 1; t <= i; ++t) b = checked_mul(b, n - i + t) / t;
    return b;
  };

  unsigned __int128 total = 0;
  for (int i = 0; i <= k; ++i) {
    if (i > n1 || i > n2) break;
    unsigned __int128 term = 1;
    for (int t = 2; t <= i; ++t) term = checked_mul(term, t);
    term = checked_mul(term, binom(n1, i));
    term = checked_mul(term, binom(n2, i));
    total += term;
    if (total > kLimit) throw std::overflow_error("clique_count_bound exceeds int64");
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace gkern
