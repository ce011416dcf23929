#include "gkern/gram.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace gkern {

namespace {

bool mode_is_size_based(KernelMode mode) {
  return mode == KernelMode::SM || mode == KernelMode::CSM || mode == KernelMode::CSI ||
         mode == KernelMode::Pharmacophore;
}

}  // namespace

GramMatrix compute_gram(const Dataset& data, const GramConfig& cfg) {
  const int n = static_cast<int>(data.graphs.size());
  if (n == 0) throw std::invalid_argument("compute_gram: dataset is empty");
  if (cfg.max_size < 1) throw std::invalid_argument("compute_gram: max-size must be >= 1");

  std::unordered_set<std::string> seen;
  for (const AttributedGraph& g : data.graphs)
    if (!seen.insert(g.graph_id()).second)
      throw std::invalid_argument("compute_gram: duplicate graph id '" + g.graph_id() + "'");

  const bool needs_kernels = cfg.mode == KernelMode::SM || cfg.mode == KernelMode::CSM ||
                             cfg.mode == KernelMode::Pharmacophore;
  if (needs_kernels && (!cfg.vertex_kernel.eval || !cfg.edge_kernel.eval))
    throw std::invalid_argument("compute_gram: this kernel mode requires vertex and edge kernels");

  const int k = cfg.mode == KernelMode::Pharmacophore ? 3 : cfg.max_size;
  Vector lambda;
  if (cfg.mode == KernelMode::Pharmacophore) {
    if (cfg.weights.size() > 0)
      throw std::invalid_argument("compute_gram: pharmacophore weights are fixed (6 at size 3)");
    lambda = Vector::Zero(3);
    lambda(2) = 6.0;
  } else {
    lambda = cfg.weights.size() > 0 ? cfg.weights : Vector::Ones(k);
    if (lambda.size() != k)
      throw std::invalid_argument("compute_gram: weight vector must have max-size entries");
  }

  GramMatrix out;
  out.ids.reserve(n);
  for (const AttributedGraph& g : data.graphs) out.ids.push_back(g.graph_id());
  out.values = Matrix::Zero(n, n);
  const bool size_based = mode_is_size_based(cfg.mode);
  if (size_based) {
    out.per_size.assign(k, Matrix::Zero(n, n));
    out.size_weights = lambda;
  }

  const WeightFunction weight = WeightFunction::per_size(lambda);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

  const auto compute_pair = [&](int i, int j) {
    const AttributedGraph& gi = data.graphs[i];
    const AttributedGraph& gj = data.graphs[j];
    try {
      KernelResult r;
      switch (cfg.mode) {
        case KernelMode::SM:
        case KernelMode::CSM: {
          const WeightedProductGraph p = build_wpg(gi, gj, cfg.vertex_kernel, cfg.edge_kernel);
          r = smkernel(p, {k, cfg.mode == KernelMode::CSM, weight});
          break;
        }
        case KernelMode::CSI:
          r = csi_kernel(gi, gj, weight, k, false);
          break;
        case KernelMode::Pharmacophore:
          r = pharmacophore_kernel_result(gi, gj, cfg.vertex_kernel, cfg.edge_kernel);
          break;
        case KernelMode::Subgraph:
          r.total = subgraph_kernel(gi, gj, lambda, k);
          break;
      }
      out.values(i, j) = out.values(j, i) = r.total;
      if (size_based)
        for (int s = 0; s < k; ++s)
          out.per_size[s](i, j) = out.per_size[s](j, i) = r.per_size_raw(s);
    } catch (const std::exception& e) {
      throw std::runtime_error("kernel failed for pair (" + gi.graph_id() + ", " + gj.graph_id() +
                               "): " + e.what());
    }
  };

  const int workers = std::max(1, cfg.threads);
  if (workers == 1) {
    for (const auto& [i, j] : pairs) compute_pair(i, j);
  } else {
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (!failed.load(std::memory_order_relaxed)) {
          const size_t idx = next.fetch_add(1);
          if (idx >= pairs.size()) return;
          try {
            compute_pair(pairs[idx].first, pairs[idx].second);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return out;
}

namespace {

Matrix cosine_normalize(const Matrix& m) {
  const Eigen::Index n = m.rows();
  const Vector diag = m.diagonal();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        out(i, i) = diag(i) > 0.0 ? 1.0 : 0.0;  // k/sqrt(k·k) = 1
      } else if (diag(i) > 0.0 && diag(j) > 0.0) {
        out(i, j) = m(i, j) / std::sqrt(diag(i) * diag(j));
      }
    }
  }
  return out;
}

}  // namespace

GramMatrix normalize_gram(const GramMatrix& m, NormalizeMode mode) {
  switch (mode) {
    case NormalizeMode::None:
      return m;
    case NormalizeMode::Cosine: {
      GramMatrix out;
      out.ids = m.ids;
      out.values = cosine_normalize(m.values);
      return out;
    }
    case NormalizeMode::PerSize: {
      if (m.per_size.empty())
        throw std::invalid_argument(
            "per-size normalization requires the per-size stack (size-based weights)");
      GramMatrix out;
      out.ids = m.ids;
      out.values = Matrix::Zero(m.values.rows(), m.values.cols());
      for (size_t s = 0; s < m.per_size.size(); ++s) {
        const double w =
            static_cast<Eigen::Index>(m.per_size.size()) == m.size_weights.size()
                ? m.size_weights(static_cast<Eigen::Index>(s))
                : 1.0;
        if (w != 0.0) out.values += w * cosine_normalize(m.per_size[s]);
      }
      return out;
    }
  }
  throw std::invalid_argument("normalize_gram: unknown mode");
}

double min_eigenvalue(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("min_eigenvalue: matrix must be square and nonempty");
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("min_eigenvalue: eigensolver failed to converge");
  return solver.eigenvalues().minCoeff();
}

void write_gram(const GramMatrix& m, const std::string& path) {
  if (static_cast<Eigen::Index>(m.ids.size()) != m.values.rows() || m.values.rows() != m.values.cols())
    throw std::invalid_argument("write_gram: ids and matrix dimensions disagree");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);

  os << "# ids: ";
  for (size_t i = 0; i < m.ids.size(); ++i) {
    if (i) os << ',';
    os << m.ids[i];
  }
  os << '\n';

  char buf[32];
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      if (j) os << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", m.values(i, j));
      os << buf;
    }
    os << '\n';
  }
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path);
}

GramMatrix read_gram(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open gram file: " + path);

  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string prefix = "# ids: ";
  if (line.rfind(prefix, 0) != 0)
    throw std::runtime_error(path + ": expected header '# ids: ...'");

  GramMatrix m;
  {
    std::stringstream ss(line.substr(prefix.size()));
    std::string id;
    while (std::getline(ss, id, ',')) m.ids.push_back(id);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(m.ids.size());
  if (n == 0) throw std::runtime_error(path + ": no ids in header");

  m.values = Matrix::Zero(n, n);
  Eigen::Index row = 0;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (row >= n)
      throw std::runtime_error(path + ": more rows than ids (matrix is not square)");
    std::stringstream ss(line);
    std::string cell;
    Eigen::Index col = 0;
    while (std::getline(ss, cell, ',')) {
      if (col >= n)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": too many columns");
      char* end = nullptr;
      const double x = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size())
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      m.values(row, col++) = x;
    }
    if (col != n)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": row has " +
                               std::to_string(col) + " columns, expected " + std::to_string(n));
    ++row;
  }
  if (row != n)
    throw std::runtime_error(path + ": body has " + std::to_string(row) + " rows, expected " +
                             std::to_string(n) + " (matrix is not square)");
  return m;
}

}  // namespace gkern
