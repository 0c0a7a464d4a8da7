#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "breadthkit/graph.hpp"

namespace breadthkit {

/// Ordered sequence of non-empty bags over the vertices of one graph.
/// Only structure is guaranteed here; the path-decomposition axioms are
/// checked by validate().
class PathDecomposition {
 public:
  PathDecomposition() = default;

  /// Checked construction: throws MalformedDecomposition on an empty bag,
  /// an out-of-range vertex or a vertex repeated inside one bag.
  static PathDecomposition from_bags(const Graph& g, std::vector<std::vector<Vertex>> bags);

  /// Trusted construction for bags produced by this library (e.g. balls).
  explicit PathDecomposition(std::vector<VertexSet> bags);

  const std::vector<VertexSet>& bags() const noexcept { return bags_; }
  std::size_t size() const noexcept { return bags_.size(); }
  bool empty() const noexcept { return bags_.empty(); }
  const VertexSet& operator[](std::size_t i) const { return bags_[i]; }

  PathDecomposition reversed() const;

 private:
  std::vector<VertexSet> bags_;
};

enum class ViolationKind { UncoveredVertex, UncoveredEdge, NonConsecutive };

std::string_view to_string(ViolationKind kind);

/// Witness of the first failed axiom.
///   UncoveredVertex: `vertex`, no bags.
///   UncoveredEdge:   `edge`; `bags` lists every bag holding edge.first
///                    (none of which holds edge.second).
///   NonConsecutive:  `vertex`; `bags` = {i, j, k} with i < j < k, the
///                    vertex in bags i and k but not j.
struct ViolationReport {
  ViolationKind kind = ViolationKind::UncoveredVertex;
  Vertex vertex = 0;
  Edge edge{0, 0};
  std::vector<std::size_t> bags;

  std::string describe() const;
};

/// nullopt when the decomposition satisfies all three axioms. Checks run in
/// the order vertex coverage, edge coverage, consecutiveness. Linear in the
/// total bag size plus the sum over edges of both endpoints' bag counts.
std::optional<ViolationReport> validate(const Graph& g, const PathDecomposition& phi);

/// Largest bag minus one. Throws EmptyDecomposition.
std::size_t width(const PathDecomposition& phi);

/// Smallest rho with every bag inside some rho-ball; the ball center may
/// lie outside the bag. Throws InvalidDecomposition if phi does not validate.
int breadth(const Graph& g, const PathDecomposition& phi);
int breadth(const Graph& g, const DistanceMatrix& dist, const PathDecomposition& phi);

struct StrongBreadth {
  int radius = 0;
  /// One center per bag with bag == N^radius[center].
  std::vector<Vertex> centers;
};

/// Smallest common rho for which every bag equals the rho-ball of some
/// vertex, with the centers that realise it; nullopt if no rho up to the
/// diameter works. Throws InvalidDecomposition if phi does not validate.
std::optional<StrongBreadth> strong_breadth_witness(const Graph& g, const DistanceMatrix& dist,
                                                    const PathDecomposition& phi);
std::optional<int> strong_breadth(const Graph& g, const PathDecomposition& phi);
std::optional<int> strong_breadth(const Graph& g, const DistanceMatrix& dist, const PathDecomposition& phi);

}  // namespace breadthkit
