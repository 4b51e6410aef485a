#include "ctwalk/graphs.hpp"

#include <json.hpp>

#include "ctwalk/errors.hpp"
#include "ctwalk/linalg.hpp"

namespace ctwalk {

namespace {

using nlohmann::json;

void validate_circulant(const CirculantSpec& s) {
  if (s.n == 0) throw ValidationError("circulant: n must be >= 1");
  if (s.coeffs.size() != s.n)
    throw ValidationError("circulant: coefficient list length must equal n");
  for (int c : s.coeffs)
    if (c != 0 && c != 1) throw ValidationError("circulant: coefficients must be 0 or 1");
  if (s.coeffs[0] != 0) throw ValidationError("circulant: a_0 must be 0 (no self-loops)");
  // Undirected Cayley condition; asymmetric input is rejected, not symmetrized.
  for (std::size_t k = 1; k < s.n; ++k)
    if (s.coeffs[k] != s.coeffs[s.n - k])
      throw ValidationError("circulant: coefficients must be symmetric (a_k = a_{n-k})");
}

void validate_explicit(const ExplicitSpec& s) {
  const std::size_t n = s.adjacency.size();
  if (n == 0) throw ValidationError("explicit: adjacency must be non-empty");
  for (const auto& row : s.adjacency)
    if (row.size() != n) throw ValidationError("explicit: adjacency must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.adjacency[i][i] != 0) throw ValidationError("explicit: diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (s.adjacency[i][j] != 0 && s.adjacency[i][j] != 1)
        throw ValidationError("explicit: entries must be 0 or 1");
      if (s.adjacency[i][j] != s.adjacency[j][i])
        throw ValidationError("explicit: adjacency must be symmetric");
    }
  }
}

Matrix circulant_adjacency(std::size_t n, const std::vector<int>& coeffs) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 1; k < n; ++k)
      if (coeffs[k] != 0) a(i, (i + k) % n) = 1.0;
  return a;
}

}  // namespace

void GraphSpec::validate() const {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          if (s.n < 3) throw ValidationError("cycle: n must be >= 3");
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          if (s.n < 2) throw ValidationError("complete: n must be >= 2");
        } else if constexpr (std::is_same_v<T, HypercubeSpec>) {
          if (s.n < 1) throw ValidationError("hypercube: n must be >= 1");
        } else if constexpr (std::is_same_v<T, CirculantSpec>) {
          validate_circulant(s);
        } else if constexpr (std::is_same_v<T, CharterSpec>) {
          if (s.n < 2) throw ValidationError("charter: n must be >= 2");
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          validate_explicit(s);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          if (s.factors.empty()) throw ValidationError("product: factor list must be non-empty");
          for (const auto& f : s.factors) f.validate();
        }
      },
      family);
}

Graph build(const GraphSpec& spec) {
  spec.validate();
  return std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          std::vector<int> coeffs(s.n, 0);
          coeffs[1] = 1;
          coeffs[s.n - 1] = 1;
          return Graph{spec, circulant_adjacency(s.n, coeffs), {s.n}};
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          Matrix a(s.n);
          for (std::size_t i = 0; i < s.n; ++i)
            for (std::size_t j = 0; j < s.n; ++j)
              if (i != j) a(i, j) = 1.0;
          return Graph{spec, std::move(a), {s.n}};
        } else if constexpr (std::is_same_v<T, HypercubeSpec>) {
          std::vector<Graph> bits(s.n, build(GraphSpec::complete(2)));
          Graph g = direct_product(bits);
          g.spec = spec;
          return g;
        } else if constexpr (std::is_same_v<T, CirculantSpec>) {
          return Graph{spec, circulant_adjacency(s.n, s.coeffs), {s.n}};
        } else if constexpr (std::is_same_v<T, CharterSpec>) {
          // K_2 (x) C_n; n = 2 degenerates to K_2 (x) K_2, the square graph.
          Graph cycle = build(s.n == 2 ? GraphSpec::complete(2) : GraphSpec::cycle(s.n));
          Graph g = direct_product({build(GraphSpec::complete(2)), std::move(cycle)});
          g.spec = spec;
          return g;
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          const std::size_t n = s.adjacency.size();
          Matrix a(n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<double>(s.adjacency[i][j]);
          return Graph{spec, std::move(a), {n}};
        } else {
          static_assert(std::is_same_v<T, ProductSpec>);
          std::vector<Graph> factors;
          factors.reserve(s.factors.size());
          for (const auto& f : s.factors) factors.push_back(build(f));
          Graph g = direct_product(factors);
          g.spec = spec;
          return g;
        }
      },
      spec.family);
}

Graph direct_product(const std::vector<Graph>& factors) {
  if (factors.empty()) throw ValidationError("direct_product: factor list must be non-empty");
  if (factors.size() == 1) return factors.front();

  std::vector<Matrix> adjacencies;
  std::vector<GraphSpec> specs;
  std::vector<std::size_t> dims;
  adjacencies.reserve(factors.size());
  for (const auto& f : factors) {
    adjacencies.push_back(f.adjacency);
    specs.push_back(f.spec);
    dims.insert(dims.end(), f.factor_dims.begin(), f.factor_dims.end());
  }
  return Graph{GraphSpec::product(std::move(specs)), kron_sum(adjacencies), std::move(dims)};
}

std::size_t degree(const Graph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw ValidationError("degree: vertex index out of range");
  double sum = 0.0;
  for (std::size_t j = 0; j < g.vertex_count(); ++j) sum += g.adjacency(v, j).real();
  return static_cast<std::size_t>(sum + 0.5);
}

std::optional<std::size_t> is_regular(const Graph& g) {
  const std::size_t d0 = degree(g, 0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (degree(g, v) != d0) return std::nullopt;
  return d0;
}

std::vector<Graph> factor_graphs(const Graph& g) {
  return std::visit(
      [&](const auto& s) -> std::vector<Graph> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HypercubeSpec>) {
          return std::vector<Graph>(s.n, build(GraphSpec::complete(2)));
        } else if constexpr (std::is_same_v<T, CharterSpec>) {
          return {build(GraphSpec::complete(2)),
                  build(s.n == 2 ? GraphSpec::complete(2) : GraphSpec::cycle(s.n))};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::vector<Graph> out;
          for (const auto& f : s.factors) {
            auto sub = factor_graphs(build(f));
            out.insert(out.end(), std::make_move_iterator(sub.begin()),
                       std::make_move_iterator(sub.end()));
          }
          return out;
        } else {
          return {g};
        }
      },
      g.spec.family);
}

namespace {

json spec_to_json_value(const GraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          return {{"family", "cycle"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          return {{"family", "complete"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, HypercubeSpec>) {
          return {{"family", "hypercube"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, CirculantSpec>) {
          return {{"family", "circulant"}, {"n", s.n}, {"coeffs", s.coeffs}};
        } else if constexpr (std::is_same_v<T, CharterSpec>) {
          return {{"family", "charter"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          return {{"family", "explicit"}, {"adjacency", s.adjacency}};
        } else {
          static_assert(std::is_same_v<T, ProductSpec>);
          json factors = json::array();
          for (const auto& f : s.factors) factors.push_back(spec_to_json_value(f));
          return {{"family", "product"}, {"factors", std::move(factors)}};
        }
      },
      spec.family);
}

std::size_t require_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw ValidationError("graph spec: \"n\" must be a non-negative integer");
  return j["n"].get<std::size_t>();
}

GraphSpec spec_from_json_value(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ValidationError("graph spec: expected an object with a \"family\" string");
  const std::string family = j["family"].get<std::string>();
  if (family == "cycle") return GraphSpec::cycle(require_n(j));
  if (family == "complete") return GraphSpec::complete(require_n(j));
  if (family == "hypercube") return GraphSpec::hypercube(require_n(j));
  if (family == "charter") return GraphSpec::charter(require_n(j));
  if (family == "circulant") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw ValidationError("graph spec: circulant requires a \"coeffs\" array");
    return GraphSpec::circulant(require_n(j), j["coeffs"].get<std::vector<int>>());
  }
  if (family == "explicit") {
    if (!j.contains("adjacency") || !j["adjacency"].is_array())
      throw ValidationError("graph spec: explicit requires an \"adjacency\" array of rows");
    return GraphSpec::explicit_adjacency(j["adjacency"].get<std::vector<std::vector<int>>>());
  }
  if (family == "product") {
    if (!j.contains("factors") || !j["factors"].is_array())
      throw ValidationError("graph spec: product requires a \"factors\" array");
    std::vector<GraphSpec> factors;
    for (const auto& f : j["factors"]) factors.push_back(spec_from_json_value(f));
    return GraphSpec::product(std::move(factors));
  }
  throw ValidationError(
      "graph spec: unknown family \"" + family +
      "\" (expected cycle|complete|hypercube|circulant|charter|product|explicit)");
}

}  // namespace

GraphSpec graph_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("graph spec: invalid JSON: ") + e.what());
  }
  GraphSpec spec = spec_from_json_value(j);
  spec.validate();
  return spec;
}

std::string graph_spec_to_json(const GraphSpec& spec) { return spec_to_json_value(spec).dump(); }

}  // namespace ctwalk
