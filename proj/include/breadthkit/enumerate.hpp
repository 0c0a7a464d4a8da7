#pragma once

#include <cstdint>
#include <vector>

#include "breadthkit/graph.hpp"

namespace breadthkit {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Adjacency bitstring in graph6 bit order (column-major upper triangle),
/// first bit most significant. Only meaningful for n <= 11.
std::uint64_t adjacency_code(std::size_t n, std::span<const Edge> edges);

struct CanonicalForm {
  std::uint64_t code = 0;
  /// position -> original vertex, so `order[k]` becomes vertex k.
  std::vector<Vertex> order;
};

/// Lexicographically smallest adjacency bitstring over all vertex
/// permutations, found by branch and bound over partial permutations.
CanonicalForm canonical_form(const Graph& g);

/// The graph relabelled by its canonical permutation.
Graph canonical_graph(const Graph& g);

/// One representative (in canonical labelling) of every connected simple
/// graph on n vertices, ordered by canonical code. Throws CapExceeded for
/// n > kMaxEnumerationOrder and EmptyGraph for n == 0.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Concatenation of enumerate_connected_graphs(1..max_n).
std::vector<Graph> connected_graph_corpus(std::size_t max_n);

}  // namespace breadthkit
