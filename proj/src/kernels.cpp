#include "gkern/kernels.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace gkern {

double dirac(const std::string& a, const std::string& b) {
  return a == b ? 1.0 : 0.0;
}

double triangular(double d1, double d2, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("triangular kernel: c must be positive");
  return std::max(0.0, c - std::abs(d1 - d2)) / c;
}

double brownian_bridge(double x1, double x2, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("brownian bridge kernel: c must be positive");
  return std::max(0.0, c - std::abs(x1 - x2));
}

double gaussian_rbf(double d1, double d2, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian rbf kernel: sigma must be positive");
  const double gap = d1 - d2;
  return std::exp(-gap * gap / (2.0 * sigma * sigma));
}

namespace {

double vertex_attr0(const AttributedGraph& g, int v) {
  if (g.vertex_attr_dim() < 1)
    throw std::invalid_argument("graph '" + g.graph_id() +
                                "' has no vertex attributes but the vertex kernel needs one");
  return g.vertex_attr(v)(0);
}

double edge_attr0(const AttributedGraph& g, int u, int v) {
  const int e = g.edge_index(u, v);
  if (e < 0)
    throw std::invalid_argument("edge kernel evaluated on a non-edge of graph '" + g.graph_id() + "'");
  if (g.edge_attr_dim() < 1)
    throw std::invalid_argument("graph '" + g.graph_id() +
                                "' has no edge attributes but the edge kernel needs one");
  return g.edge_attr(e)(0);
}

std::string param_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

VertexKernel vertex_label_dirac() {
  return {"dirac", [](const AttributedGraph& g1, int v1, const AttributedGraph& g2, int v2) {
            return dirac(g1.vertex_label(v1), g2.vertex_label(v2));
          }};
}

VertexKernel vertex_attr_triangular(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("triangular kernel: c must be positive");
  return {"triangular:c=" + param_str(c),
          [c](const AttributedGraph& g1, int v1, const AttributedGraph& g2, int v2) {
            return triangular(vertex_attr0(g1, v1), vertex_attr0(g2, v2), c);
          }};
}

VertexKernel vertex_attr_brownian(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("brownian bridge kernel: c must be positive");
  return {"brownian:c=" + param_str(c),
          [c](const AttributedGraph& g1, int v1, const AttributedGraph& g2, int v2) {
            return brownian_bridge(vertex_attr0(g1, v1), vertex_attr0(g2, v2), c);
          }};
}

VertexKernel vertex_attr_rbf(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian rbf kernel: sigma must be positive");
  return {"rbf:sigma=" + param_str(sigma),
          [sigma](const AttributedGraph& g1, int v1, const AttributedGraph& g2, int v2) {
            return gaussian_rbf(vertex_attr0(g1, v1), vertex_attr0(g2, v2), sigma);
          }};
}

VertexKernel product_kernel(std::vector<VertexKernel> parts) {
  if (parts.empty()) throw std::invalid_argument("product_kernel: needs at least one part");
  std::string name = "product(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) name += ',';
    name += parts[i].name;
  }
  name += ')';
  return {std::move(name),
          [parts = std::move(parts)](const AttributedGraph& g1, int v1,
                                     const AttributedGraph& g2, int v2) {
            double value = 1.0;
            for (const VertexKernel& k : parts) value *= k(g1, v1, g2, v2);
            return value;
          }};
}

EdgeKernel edge_label_dirac() {
  return {"dirac", [](const AttributedGraph& g1, int u1, int v1,
                      const AttributedGraph& g2, int u2, int v2) {
            const int e1 = g1.edge_index(u1, v1);
            const int e2 = g2.edge_index(u2, v2);
            if (e1 < 0 || e2 < 0)
              throw std::invalid_argument("edge kernel evaluated on a non-edge");
            return dirac(g1.edge_label(e1), g2.edge_label(e2));
          }};
}

EdgeKernel edge_attr_triangular(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("triangular kernel: c must be positive");
  return {"triangular:c=" + param_str(c),
          [c](const AttributedGraph& g1, int u1, int v1, const AttributedGraph& g2, int u2, int v2) {
            return triangular(edge_attr0(g1, u1, v1), edge_attr0(g2, u2, v2), c);
          }};
}

EdgeKernel edge_attr_brownian(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("brownian bridge kernel: c must be positive");
  return {"brownian:c=" + param_str(c),
          [c](const AttributedGraph& g1, int u1, int v1, const AttributedGraph& g2, int u2, int v2) {
            return brownian_bridge(edge_attr0(g1, u1, v1), edge_attr0(g2, u2, v2), c);
          }};
}

EdgeKernel edge_attr_rbf(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian rbf kernel: sigma must be positive");
  return {"rbf:sigma=" + param_str(sigma),
          [sigma](const AttributedGraph& g1, int u1, int v1, const AttributedGraph& g2, int u2, int v2) {
            return gaussian_rbf(edge_attr0(g1, u1, v1), edge_attr0(g2, u2, v2), sigma);
          }};
}

EdgeKernel edge_kernel_adapter(EdgeKernel on_edges, double d_weight) {
  return {"adapter(" + on_edges.name + ")",
          [inner = std::move(on_edges.eval), d_weight](const AttributedGraph& g1, int u1, int v1,
                                                       const AttributedGraph& g2, int u2, int v2) {
            const bool e1 = g1.adjacent(u1, v1);
            const bool e2 = g2.adjacent(u2, v2);
            if (e1 && e2) return inner(g1, u1, v1, g2, u2, v2);
            if (!e1 && !e2) return d_weight;
            return 0.0;
          }};
}

// ---- kernel spec parsing -------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Split on top-level commas (commas inside parentheses belong to nested specs).
std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

struct ParsedSpec {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::string_view> product_args;  // nonempty iff name == "product"
};

ParsedSpec parse_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw std::invalid_argument("empty kernel spec");

  ParsedSpec p;
  if (spec.starts_with("product(")) {
    if (!spec.ends_with(')'))
      throw std::invalid_argument("kernel spec '" + std::string(spec) + "': missing ')'");
    p.name = "product";
    p.product_args = split_args(spec.substr(8, spec.size() - 9));
    return p;
  }

  const size_t colon = spec.find(':');
  p.name = std::string(trim(spec.substr(0, colon)));
  if (colon != std::string_view::npos) {
    for (std::string_view part : split_args(spec.substr(colon + 1))) {
      const size_t eq = part.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("kernel spec '" + std::string(spec) + "': expected key=value");
      const std::string key(trim(part.substr(0, eq)));
      const std::string val(trim(part.substr(eq + 1)));
      char* end = nullptr;
      const double x = std::strtod(val.c_str(), &end);
      if (end != val.c_str() + val.size() || val.empty())
        throw std::invalid_argument("kernel spec '" + std::string(spec) + "': bad number '" + val + "'");
      p.params.emplace_back(key, x);
    }
  }
  return p;
}

double get_param(const ParsedSpec& p, const std::string& key) {
  for (const auto& [k, v] : p.params)
    if (k == key) return v;
  throw std::invalid_argument("kernel '" + p.name + "' requires parameter " + key +
                              " (e.g. " + p.name + ":" + key + "=1.0)");
}

}  // namespace

VertexKernel parse_vertex_kernel(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  if (p.name == "product") {
    std::vector<VertexKernel> parts;
    for (std::string_view arg : p.product_args) parts.push_back(parse_vertex_kernel(arg));
    return product_kernel(std::move(parts));
  }
  if (p.name == "dirac") return vertex_label_dirac();
  if (p.name == "triangular") return vertex_attr_triangular(get_param(p, "c"));
  if (p.name == "brownian") return vertex_attr_brownian(get_param(p, "c"));
  if (p.name == "rbf") return vertex_attr_rbf(get_param(p, "sigma"));
  throw std::invalid_argument("unknown vertex kernel '" + p.name +
                              "' (expected dirac, triangular, brownian, rbf or product(...))");
}

EdgeKernel parse_edge_base_kernel(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  if (p.name == "dirac") return edge_label_dirac();
  if (p.name == "triangular") return edge_attr_triangular(get_param(p, "c"));
  if (p.name == "brownian") return edge_attr_brownian(get_param(p, "c"));
  if (p.name == "rbf") return edge_attr_rbf(get_param(p, "sigma"));
  throw std::invalid_argument("unknown edge kernel '" + p.name +
                              "' (expected dirac, triangular, brownian or rbf)");
}

EdgeKernel parse_edge_kernel(std::string_view spec, double d_weight) {
  return edge_kernel_adapter(parse_edge_base_kernel(spec), d_weight);
}

}  // namespace gkern
