#pragma once

#include <array>
#include <optional>
#include <vector>

#include "breadthkit/constructor.hpp"
#include "breadthkit/error.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

struct AsteroidalTriple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  friend bool operator==(const AsteroidalTriple&, const AsteroidalTriple&) = default;
};

/// Every x-y path passes within distance 1 of every vertex.
struct DominatingPair {
  Vertex x = 0;
  Vertex y = 0;

  friend bool operator==(const DominatingPair&, const DominatingPair&) = default;
};

/// For each vertex v, component ids of G - N[v] (-1 for vertices of N[v]).
/// Both searches below reduce to lookups in this table.
class AvoidanceComponents {
 public:
  explicit AvoidanceComponents(const Graph& g);

  /// True when neither vertex is in N[v] and they share a component of G - N[v].
  bool joined_avoiding(Vertex v, Vertex a, Vertex b) const noexcept {
    const int ca = label(v, a);
    return ca >= 0 && ca == label(v, b);
  }
  int label(Vertex v, Vertex x) const noexcept { return labels_[static_cast<std::size_t>(v) * n_ + x]; }

 private:
  std::size_t n_;
  std::vector<int> labels_;
};

/// Lexicographically least asteroidal triple (a < b < c), or nullopt when G
/// is AT-free. Brute force over independent triples.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

/// A dominating pair, scanning pairs x < y by decreasing d(x, y) and then
/// lexicographically. On K_1 the pair is (0, 0).
std::optional<DominatingPair> find_dominating_pair_ecc1_serial(const Graph& g);
std::optional<DominatingPair> find_dominating_pair_ecc1(const Graph& g);

bool is_dominating_pair(const Graph& g, const AvoidanceComponents& avoid, Vertex x, Vertex y);

class NotAtFreeError : public Error {
 public:
  explicit NotAtFreeError(AsteroidalTriple witness);
  const AsteroidalTriple& witness() const noexcept { return witness_; }

 private:
  AsteroidalTriple witness_;
};

struct AtFreeDecomposition {
  DominatingPair pair;
  CenteredDecomposition result;
};

/// Dominating pair -> BFS shortest path between it -> ball cover. The path
/// has eccentricity at most 1, so the bags have radius at most 2. Throws
/// NotAtFreeError (kind NotATFree) unless `assume_atfree`, and
/// NoDominatingPair if no pair qualifies.
AtFreeDecomposition atfree_strong_breadth2(const Graph& g, bool assume_atfree = false);

/// Lexicographically least shortest path from x to y.
Path bfs_shortest_path(const Graph& g, Vertex x, Vertex y);

}  // namespace breadthkit
