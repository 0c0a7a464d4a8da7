#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace breadthkit {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreached = -1;

/// Unordered set of vertices. Members keep the order they were inserted in
/// (BFS discovery order for balls); equality is set equality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {}

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Linear scan; callers on hot paths use a marking array instead.
  bool contains(Vertex v) const noexcept;
  std::vector<Vertex> sorted() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<Vertex> members_;
};

/// Simple, connected, unweighted graph in compressed adjacency form.
/// Vertices are dense indices 0..n-1 and each adjacency list is sorted.
class Graph {
 public:
  /// Builds the graph, collapsing duplicate edges. Throws Error with
  /// SelfLoop, VertexOutOfRange, EmptyGraph or Disconnected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept;
  bool valid(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n(); }

  /// Offset of v's first adjacency entry; entry k of v has id offset(v)+k.
  std::size_t offset(Vertex v) const noexcept { return offsets_[v]; }

  /// Edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  /// Original input labels, indexed by dense vertex. Identity unless the
  /// graph was loaded from an edge list with non-contiguous labels.
  std::int64_t label(Vertex v) const noexcept { return labels_.empty() ? v : labels_[v]; }
  void set_labels(std::vector<std::int64_t> labels);
  bool has_identity_labels() const noexcept { return labels_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::int64_t> labels_;
};

/// Connectivity of an arbitrary adjacency structure (used before a Graph
/// exists, e.g. during enumeration).
bool is_connected(std::size_t n, std::span<const Edge> edges);

std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// N^radius[center] via a distance-limited BFS; vertices at distance
/// `radius` are not expanded.
VertexSet ball(const Graph& g, Vertex center, int radius);

struct RadiusCenter {
  int radius = 0;
  Vertex center = 0;
};

/// Graph radius and the smallest-index vertex attaining it.
RadiusCenter eccentricity_radius(const Graph& g);

/// Dense all-pairs distance table, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreached) {}

  std::size_t n() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const noexcept { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const noexcept { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }
  std::span<int> row(Vertex u) noexcept { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }

  int diameter() const noexcept;
  int eccentricity(Vertex v) const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

/// One BFS per source. The serial version is the reference for the
/// OpenMP kernel; both must produce identical tables.
DistanceMatrix all_pairs_distances_serial(const Graph& g);
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace breadthkit
