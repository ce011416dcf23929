// Command-line front end: Gram matrix computation over graph datasets,
// PSD checking of kernel matrices, and a hidden brute-force oracle for
// debugging kernel configurations on single pairs.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "gkern/gram.hpp"
#include "gkern/oracles.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPsdViolation = 1;
constexpr int kExitInputError = 2;

gkern::KernelMode parse_mode(const std::string& s) {
  if (s == "sm") return gkern::KernelMode::SM;
  if (s == "csm") return gkern::KernelMode::CSM;
  if (s == "csi") return gkern::KernelMode::CSI;
  if (s == "subgraph") return gkern::KernelMode::Subgraph;
  if (s == "pharmacophore") return gkern::KernelMode::Pharmacophore;
  throw std::invalid_argument("unknown kernel '" + s + "'");
}

gkern::Vector parse_weights(const std::string& spec, int k) {
  if (spec == "uniform") return gkern::Vector();
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double x = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size())
      throw std::invalid_argument("--weights: bad number '" + tok + "'");
    values.push_back(x);
  }
  if (static_cast<int>(values.size()) != k)
    throw std::invalid_argument("--weights: expected 'uniform' or " + std::to_string(k) +
                                " comma-separated values (one per size up to --max-size)");
  return Eigen::Map<const gkern::Vector>(values.data(), values.size());
}

gkern::NormalizeMode parse_normalize(const std::string& s) {
  if (s == "none") return gkern::NormalizeMode::None;
  if (s == "cosine") return gkern::NormalizeMode::Cosine;
  if (s == "per-size") return gkern::NormalizeMode::PerSize;
  throw std::invalid_argument("unknown normalization '" + s + "'");
}

int resolve_threads(int flag_value, bool flag_given) {
  if (flag_given) {
    if (flag_value < 1) throw std::invalid_argument("--threads must be >= 1");
    return flag_value;
  }
  if (const char* env = std::getenv("GK_THREADS")) {
    char* end = nullptr;
    const long t = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || t < 1)
      throw std::invalid_argument(std::string("GK_THREADS must be a positive integer, got '") +
                                  env + "'");
    return static_cast<int>(t);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct ComputeOptions {
  std::string dataset;
  std::string kernel;
  int max_size = 3;
  std::string vertex_kernel = "dirac";
  std::string edge_kernel = "dirac";
  bool vertex_kernel_given = false;
  bool edge_kernel_given = false;
  bool max_size_given = false;
  std::string weights = "uniform";
  std::string normalize = "none";
  std::string out;
  int threads = 0;
  bool threads_given = false;
};

int run_compute(const ComputeOptions& o) {
  const gkern::Dataset ds = gkern::parse_dataset(o.dataset);
  if (ds.graphs.empty()) throw std::invalid_argument("dataset contains no graphs");

  gkern::GramConfig cfg;
  cfg.mode = parse_mode(o.kernel);
  cfg.max_size = o.max_size;
  cfg.threads = resolve_threads(o.threads, o.threads_given);

  switch (cfg.mode) {
    case gkern::KernelMode::SM:
    case gkern::KernelMode::CSM:
      cfg.vertex_kernel = gkern::parse_vertex_kernel(o.vertex_kernel);
      cfg.edge_kernel = gkern::parse_edge_kernel(o.edge_kernel);
      cfg.weights = parse_weights(o.weights, cfg.max_size);
      break;
    case gkern::KernelMode::CSI:
    case gkern::KernelMode::Subgraph:
      if (o.vertex_kernel_given || o.edge_kernel_given)
        std::cerr << "note: " << o.kernel
                  << " always uses Dirac label kernels; --vertex-kernel/--edge-kernel ignored\n";
      cfg.weights = parse_weights(o.weights, cfg.max_size);
      break;
    case gkern::KernelMode::Pharmacophore:
      if (o.max_size_given && o.max_size != 3)
        throw std::invalid_argument("pharmacophore kernel is defined for --max-size 3");
      cfg.max_size = 3;
      if (!o.edge_kernel_given)
        throw std::invalid_argument(
            "pharmacophore kernel requires --edge-kernel (distance kernel, e.g. triangular:c=0.25)");
      if (o.weights != "uniform")
        throw std::invalid_argument("pharmacophore weights are fixed (6 at size 3); drop --weights");
      cfg.vertex_kernel = gkern::parse_vertex_kernel(o.vertex_kernel);
      cfg.edge_kernel = gkern::parse_edge_base_kernel(o.edge_kernel);
      break;
  }

  const gkern::GramMatrix gram = gkern::compute_gram(ds, cfg);
  const gkern::GramMatrix result = gkern::normalize_gram(gram, parse_normalize(o.normalize));
  gkern::write_gram(result, o.out);
  std::cout << "wrote " << result.ids.size() << "x" << result.ids.size() << " gram matrix to "
            << o.out << " (kernel=" << o.kernel << ", k=" << cfg.max_size
            << ", normalize=" << o.normalize << ", threads=" << cfg.threads << ")\n";
  return kExitOk;
}

int run_check_psd(const std::string& path, double tol) {
  const gkern::GramMatrix m = gkern::read_gram(path);
  const double min_ev = gkern::min_eigenvalue(m.values);
  const double max_diag = m.values.diagonal().maxCoeff();
  const double threshold = -tol * (max_diag > 0.0 ? max_diag : 1.0);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", min_ev);
  std::cout << "min eigenvalue: " << buf << " (threshold " << threshold << ")\n";
  if (min_ev < threshold) {
    std::cout << "NOT positive semidefinite\n";
    return kExitPsdViolation;
  }
  std::cout << "positive semidefinite\n";
  return kExitOk;
}

struct OracleOptions {
  std::string dataset;
  int i = 0;
  int j = 0;
  std::string kernel = "sm";
  int max_size = 3;
  std::string vertex_kernel = "dirac";
  std::string edge_kernel = "dirac";
  std::string weights = "uniform";
  std::string dump_wpg;
};

std::function<double(double, double)> parse_scalar_kernel(const std::string& spec) {
  // reuse the edge-kernel vocabulary for kernels on plain distances
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto param = [&](const std::string& key) {
    const std::string prefix = key + "=";
    const auto pos = spec.find(prefix, colon == std::string::npos ? 0 : colon);
    if (pos == std::string::npos)
      throw std::invalid_argument("kernel '" + name + "' requires parameter " + key);
    return std::strtod(spec.c_str() + pos + prefix.size(), nullptr);
  };
  if (name == "triangular") {
    const double c = param("c");
    return [c](double a, double b) { return gkern::triangular(a, b, c); };
  }
  if (name == "brownian") {
    const double c = param("c");
    return [c](double a, double b) { return gkern::brownian_bridge(a, b, c); };
  }
  if (name == "rbf") {
    const double s = param("sigma");
    return [s](double a, double b) { return gkern::gaussian_rbf(a, b, s); };
  }
  throw std::invalid_argument("unknown distance kernel '" + name + "'");
}

int run_oracle(const OracleOptions& o) {
  const gkern::Dataset ds = gkern::parse_dataset(o.dataset);
  const int n = static_cast<int>(ds.graphs.size());
  if (o.i < 0 || o.i >= n || o.j < 0 || o.j >= n)
    throw std::invalid_argument("--i/--j out of range (dataset has " + std::to_string(n) + " graphs)");
  const gkern::AttributedGraph& g1 = ds.graphs[o.i];
  const gkern::AttributedGraph& g2 = ds.graphs[o.j];

  double value = 0.0;
  gkern::VertexKernel kv;
  gkern::EdgeKernel ke;
  const gkern::Vector w = parse_weights(o.weights, o.max_size);
  const gkern::WeightFunction weight =
      w.size() > 0 ? gkern::WeightFunction::per_size(w) : gkern::WeightFunction::uniform();

  if (o.kernel == "sm" || o.kernel == "csm") {
    kv = gkern::parse_vertex_kernel(o.vertex_kernel);
    ke = gkern::parse_edge_kernel(o.edge_kernel);
    value = gkern::oracle::brute_force_sm(g1, g2, kv, ke, weight, o.max_size, o.kernel == "csm");
  } else if (o.kernel == "csi") {
    kv = gkern::vertex_label_dirac();
    ke = gkern::edge_kernel_adapter(gkern::edge_label_dirac());
    value = gkern::oracle::brute_force_sm(g1, g2, kv, ke, weight, o.max_size, false);
  } else if (o.kernel == "subgraph") {
    const gkern::Vector lambda = w.size() > 0 ? w : gkern::Vector::Ones(o.max_size);
    value = gkern::oracle::brute_force_subgraph_kernel(g1, g2, lambda, o.max_size);
  } else if (o.kernel == "pharmacophore") {
    if (ds.points[o.i].empty() || ds.points[o.j].empty())
      throw std::invalid_argument("pharmacophore oracle needs point blocks in the dataset");
    kv = gkern::parse_vertex_kernel(o.vertex_kernel);
    ke = gkern::parse_edge_base_kernel(o.edge_kernel);
    value = gkern::oracle::brute_force_pharmacophore(
        ds.points[o.i], ds.points[o.j],
        [](const std::string& a, const std::string& b) { return gkern::dirac(a, b); },
        parse_scalar_kernel(o.edge_kernel));
  } else {
    throw std::invalid_argument("unknown kernel '" + o.kernel + "'");
  }

  if (!o.dump_wpg.empty()) {
    if (!kv.eval) {
      kv = gkern::vertex_label_dirac();
      ke = gkern::edge_kernel_adapter(gkern::edge_label_dirac());
    }
    const gkern::WeightedProductGraph p = gkern::build_wpg(g1, g2, kv, ke);
    std::ofstream os(o.dump_wpg);
    if (!os) throw std::runtime_error("cannot open for writing: " + o.dump_wpg);
    gkern::write_wpg_edges(p, os);
  }

  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  std::cout << buf << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgraph matching graph kernels over weighted product graphs"};
  app.require_subcommand(1);

  ComputeOptions copt;
  CLI::App* compute = app.add_subcommand("compute", "compute a Gram matrix over a dataset");
  compute->add_option("--dataset", copt.dataset, "dataset file")->required();
  compute->add_option("--kernel", copt.kernel, "sm|csm|csi|subgraph|pharmacophore")->required();
  compute->add_option("--max-size", copt.max_size, "matching size cap k");
  compute->add_option("--vertex-kernel", copt.vertex_kernel, "vertex kernel spec (default dirac)");
  compute->add_option("--edge-kernel", copt.edge_kernel, "edge kernel spec (default dirac)");
  compute->add_option("--weights", copt.weights, "uniform | w1,...,wK");
  compute->add_option("--normalize", copt.normalize, "none|cosine|per-size");
  compute->add_option("--out", copt.out, "output gram file")->required();
  compute->add_option("--threads", copt.threads, "worker count (overrides GK_THREADS)");

  std::string gram_path;
  double tol = 1e-8;
  CLI::App* check = app.add_subcommand("check-psd", "check a gram file for positive semidefiniteness");
  check->add_option("--gram", gram_path, "gram file")->required();
  check->add_option("--tol", tol, "relative tolerance (default 1e-8)");

  OracleOptions oopt;
  CLI::App* orc = app.add_subcommand("oracle", "brute-force reference value for one pair (debug)");
  orc->group("");  // hidden
  orc->add_option("--dataset", oopt.dataset)->required();
  orc->add_option("--i", oopt.i);
  orc->add_option("--j", oopt.j);
  orc->add_option("--kernel", oopt.kernel);
  orc->add_option("--max-size", oopt.max_size);
  orc->add_option("--vertex-kernel", oopt.vertex_kernel);
  orc->add_option("--edge-kernel", oopt.edge_kernel);
  orc->add_option("--weights", oopt.weights);
  orc->add_option("--dump-wpg", oopt.dump_wpg, "write the product graph edge list to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  copt.vertex_kernel_given = compute->count("--vertex-kernel") > 0;
  copt.edge_kernel_given = compute->count("--edge-kernel") > 0;
  copt.max_size_given = compute->count("--max-size") > 0;
  copt.threads_given = compute->count("--threads") > 0;

  try {
    if (compute->parsed()) return run_compute(copt);
    if (check->parsed()) return run_check_psd(gram_path, tol);
    if (orc->parsed()) return run_oracle(oopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
