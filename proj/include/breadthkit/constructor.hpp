#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "breadthkit/decomposition.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

/// Vertex sequence (v_0, ..., v_l) in a graph.
struct Path {
  std::vector<Vertex> vertices;

  /// Hop length l.
  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex operator[](std::size_t i) const { return vertices[i]; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Max over all vertices of the distance to the nearest path vertex, via one
/// multi-source BFS. Throws PathNotInGraph if the path is empty, names an
/// unknown vertex or has a non-adjacent consecutive pair.
int path_eccentricity(const Graph& g, const Path& path);

/// Consecutive vertices adjacent, no repeats, and d(v_0, v_l) = l.
bool is_shortest_path(const Graph& g, const Path& path);

/// Instrumentation of the distance-limited BFS runs that build the bags.
/// `vertices_settled` counts ball memberships and `adjacency_scans` counts
/// adjacency entries read while expanding non-boundary vertices; every
/// adjacency entry is one half of an undirected edge.
struct BfsWork {
  std::uint64_t vertices_settled = 0;
  std::uint64_t adjacency_scans = 0;

  /// Vertex work plus undirected-edge work, doubled to stay integral.
  std::uint64_t doubled_total() const noexcept { return 2 * vertices_settled + adjacency_scans; }
  double total() const noexcept { return static_cast<double>(vertices_settled) + adjacency_scans / 2.0; }

  /// total() <= 3n + 2m
  bool within_linear_bound(std::size_t n, std::size_t m) const noexcept {
    return doubled_total() <= 6 * static_cast<std::uint64_t>(n) + 4 * static_cast<std::uint64_t>(m);
  }

  friend bool operator==(const BfsWork&, const BfsWork&) = default;
};

/// Result of the ball-cover construction along a shortest path.
///
/// For lambda >= 1 the centers sit every 2*lambda steps along the path,
/// starting at offset delta = floor((l mod 2*lambda) / 2), and every bag is
/// the 2*lambda-ball of its center. When lambda = 0 the graph is the path
/// itself: spacing 2 and radius 1 are used instead, or a single radius-0
/// bag when l = 0.
struct CenteredDecomposition {
  Path path;
  int lambda = 0;
  int radius = 0;
  std::size_t spacing = 0;
  std::size_t last_index = 0;  // L: centers are q_0 .. q_L
  std::size_t offset = 0;      // delta
  std::vector<Vertex> centers;
  PathDecomposition decomposition;
  BfsWork work;
};

/// Serial reference: one scratch distance array shared by all balls and
/// reset only where touched, so total work is proportional to n + m.
/// Throws NotAShortestPath.
CenteredDecomposition construct_phi_serial(const Graph& g, const Path& path);

/// OpenMP kernel: balls grown concurrently with per-thread scratch. Output
/// (including bag member order and work counters) is identical to the
/// serial reference.
CenteredDecomposition construct_phi(const Graph& g, const Path& path);

struct MembershipHistogram {
  std::size_t max_bags_per_vertex = 0;
  std::size_t max_bags_per_edge = 0;

  friend bool operator==(const MembershipHistogram&, const MembershipHistogram&) = default;
};

/// Largest number of bags holding one vertex, and one edge (both ends).
MembershipHistogram bag_membership_histogram(const Graph& g, const PathDecomposition& phi);

}  // namespace breadthkit
