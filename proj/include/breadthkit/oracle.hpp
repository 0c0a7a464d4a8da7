#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "breadthkit/decomposition.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

struct OracleResult {
  int value = 0;
  PathDecomposition witness;
  /// Ball centers of the witness bags (strong pathbreadth only).
  std::vector<Vertex> centers;
  /// Vertex ordering whose layout bags form the witness (pathbreadth only).
  std::vector<Vertex> layout;
};

/// Bags of the layout decomposition of an ordering: bag i holds v_i and
/// every earlier vertex with a neighbor at position >= i.
PathDecomposition layout_decomposition(const Graph& g, std::span<const Vertex> order);

/// Exact pathbreadth: the minimum, over all vertex orderings, of the breadth
/// of the layout decomposition. Dynamic programming over placed-vertex sets
/// (each layout bag depends only on the set placed before it and the next
/// vertex). Throws CapExceeded above `max_vertices`.
OracleResult exact_pathbreadth(const Graph& g, std::size_t max_vertices = 8);

/// Exact strong pathbreadth: for rho = 0, 1, ... a depth-first search over
/// sequences of distinct centers whose rho-balls form a path decomposition.
/// A vertex that left the current bag is closed and may not reappear.
/// Succeeds at the latest at rho = radius(G) with a single bag.
OracleResult exact_strong_pathbreadth(const Graph& g, std::size_t max_vertices = 7);

struct Theorem1Report {
  int pb = 0;
  int spb = 0;
  /// pb <= spb <= 4 pb
  bool holds = false;
};

Theorem1Report verify_theorem1(const Graph& g);

/// verify_theorem1 over a corpus; the OpenMP version distributes graphs over
/// threads and returns reports in corpus order.
std::vector<Theorem1Report> sweep_theorem1_serial(std::span<const Graph> corpus);
std::vector<Theorem1Report> sweep_theorem1(std::span<const Graph> corpus);

}  // namespace breadthkit
