#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "breadthkit/constructor.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

enum class MespMethod { ExactSmall, AllPairsHeuristic, External };

std::string_view to_string(MespMethod method);

/// Guarantee of a path finder: eccentricity <= phi * k + psi, where k is the
/// minimum eccentricity of any shortest path.
struct MespQuality {
  double phi = 1.0;
  double psi = 0.0;
};

struct MespResult {
  Path path;
  int eccentricity = 0;
  MespMethod method = MespMethod::External;
  std::optional<MespQuality> quality;
};

struct ExactMespLimits {
  std::size_t max_vertices = 10;
  std::size_t max_paths = 1'000'000;
};

/// Minimum-eccentricity shortest path by enumerating every shortest path
/// between every ordered pair (single-vertex paths included). Ties go to the
/// smallest (source, target), then the lexicographically least sequence.
/// Throws CapExceeded when either limit is hit.
MespResult exact_mesp_small(const Graph& g, ExactMespLimits limits = {});

/// For every ordered pair (s, t), the BFS path from s whose predecessors are
/// the smallest-index candidates; returns the best one, ties broken by
/// (eccentricity, s, t). Quality unknown. O(n^2 (n + m)).
MespResult all_pairs_heuristic_serial(const Graph& g);
MespResult all_pairs_heuristic(const Graph& g);

using PathFinder = std::function<MespResult(const Graph&)>;

enum class FinderKind { ExactSmall, AllPairs };

/// "exact-small" or "all-pairs"; nullopt otherwise.
std::optional<FinderKind> parse_finder(std::string_view name);
PathFinder make_finder(FinderKind kind);

struct SpbApproximation {
  MespResult found;
  CenteredDecomposition result;
};

/// Runs the finder and builds the ball cover along its path. The
/// decomposition has strong breadth at most 2 * found.eccentricity.
SpbApproximation approximate_spb(const Graph& g, const PathFinder& finder);

/// 4 * phi * spb + 2 * psi: the strong-breadth bound obtained from a finder
/// with the given quality.
double strong_breadth_bound(const MespQuality& quality, int spb);

}  // namespace breadthkit
