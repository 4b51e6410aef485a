#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctwalk/matrix.hpp"

namespace ctwalk {

struct GraphSpec;

struct CycleSpec {
  std::size_t n;  // n >= 3
};
struct CompleteSpec {
  std::size_t n;  // n >= 2
};
struct HypercubeSpec {
  std::size_t n;  // n >= 1; 2^n vertices
};
struct CirculantSpec {
  std::size_t n;
  std::vector<int> coeffs;  // length n, 0/1, symmetric (a_k = a_{n-k}), a_0 = 0
};
struct CharterSpec {
  std::size_t n;  // n >= 2; n = 2 is the square graph
};
struct ExplicitSpec {
  std::vector<std::vector<int>> adjacency;  // 0/1, symmetric, zero diagonal
};
struct ProductSpec {
  std::vector<GraphSpec> factors;  // non-empty
};

/// Declarative graph description: a named family with parameters, an explicit
/// adjacency matrix, or a direct product of other specs.
struct GraphSpec {
  std::variant<CycleSpec, CompleteSpec, HypercubeSpec, CirculantSpec, CharterSpec, ExplicitSpec,
               ProductSpec>
      family;

  static GraphSpec cycle(std::size_t n) { return {CycleSpec{n}}; }
  static GraphSpec complete(std::size_t n) { return {CompleteSpec{n}}; }
  static GraphSpec hypercube(std::size_t n) { return {HypercubeSpec{n}}; }
  static GraphSpec circulant(std::size_t n, std::vector<int> coeffs) {
    return {CirculantSpec{n, std::move(coeffs)}};
  }
  static GraphSpec charter(std::size_t n) { return {CharterSpec{n}}; }
  static GraphSpec explicit_adjacency(std::vector<std::vector<int>> adjacency) {
    return {ExplicitSpec{std::move(adjacency)}};
  }
  static GraphSpec product(std::vector<GraphSpec> factors) {
    return {ProductSpec{std::move(factors)}};
  }

  /// Throws ValidationError naming the violated constraint.
  void validate() const;
};

/// A built graph: 0/1 symmetric hollow adjacency plus the dimensions of the
/// product factors it was assembled from (singleton for atomic graphs).
/// Product vertex labels are mixed-radix over factor_dims, leftmost factor
/// most significant.
struct Graph {
  GraphSpec spec;
  Matrix adjacency;
  std::vector<std::size_t> factor_dims;

  std::size_t vertex_count() const { return adjacency.dim(); }
};

Graph build(const GraphSpec& spec);

/// Kronecker-sum product: A = sum_j I (x) ... (x) A_j (x) ... (x) I,
/// factor_dims concatenated.
Graph direct_product(const std::vector<Graph>& factors);

/// Row sum of the adjacency at v.
std::size_t degree(const Graph& g, std::size_t v);

/// The common degree if every vertex has it, otherwise nullopt.
std::optional<std::size_t> is_regular(const Graph& g);

/// The flattened list of atomic factors (rebuilt from the spec); {g} for
/// atomic graphs. Hypercube(n) yields n copies of K_2, Charter(n) yields
/// K_2 and C_n (K_2 twice when n = 2).
std::vector<Graph> factor_graphs(const Graph& g);

/// JSON wire format, e.g. {"family":"cycle","n":5},
/// {"family":"circulant","n":6,"coeffs":[0,1,0,0,0,1]},
/// {"family":"product","factors":[...]}, {"family":"explicit","adjacency":[[0,1],[1,0]]}.
GraphSpec graph_spec_from_json(const std::string& text);
std::string graph_spec_to_json(const GraphSpec& spec);

}  // namespace ctwalk
