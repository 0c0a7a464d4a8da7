#include "breadthkit/mesp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "breadthkit/error.hpp"

namespace breadthkit {

std::string_view to_string(MespMethod method) {
  switch (method) {
    case MespMethod::ExactSmall: return "exact-small";
    case MespMethod::AllPairsHeuristic: return "all-pairs";
    case MespMethod::External: return "external";
  }
  return "unknown";
}

namespace {

int eccentricity_from_table(const DistanceMatrix& dist, std::span<const Vertex> path) {
  int worst = 0;
  for (Vertex v = 0; static_cast<std::size_t>(v) < dist.n(); ++v) {
    int nearest = std::numeric_limits<int>::max();
    for (Vertex u : path) nearest = std::min(nearest, dist(u, v));
    worst = std::max(worst, nearest);
  }
  return worst;
}

class ShortestPathEnumerator {
 public:
  ShortestPathEnumerator(const Graph& g, const DistanceMatrix& dist, std::size_t max_paths)
      : g_(g), dist_(dist), max_paths_(max_paths) {}

  // Visits the shortest s-t paths in lexicographic order.
  void run(Vertex s, Vertex t, const std::function<void(std::span<const Vertex>)>& visit) {
    stack_.assign(1, s);
    descend(t, visit);
  }

 private:
  void descend(Vertex t, const std::function<void(std::span<const Vertex>)>& visit) {
    const Vertex cur = stack_.back();
    if (cur == t) {
      if (++enumerated_ > max_paths_) {
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(max_paths_) + " shortest paths");
      }
      visit(stack_);
      return;
    }
    const int remaining = dist_(cur, t);
    for (Vertex w : g_.neighbors(cur)) {
      if (dist_(w, t) != remaining - 1) continue;
      stack_.push_back(w);
      descend(t, visit);
      stack_.pop_back();
    }
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  std::size_t max_paths_;
  std::size_t enumerated_ = 0;
  std::vector<Vertex> stack_;
};

// Best path from source s over all targets, with smallest-index predecessors.
struct SourceBest {
  int eccentricity = std::numeric_limits<int>::max();
  Path path;
};

SourceBest best_from_source(const Graph& g, Vertex s, std::vector<int>& scratch, std::vector<Vertex>& queue) {
  const std::vector<int> from_s = bfs_distances(g, s);
  std::vector<Vertex> pred(g.n(), -1);
  for (Vertex w = 0; static_cast<std::size_t>(w) < g.n(); ++w) {
    for (Vertex u : g.neighbors(w)) {
      if (from_s[u] == from_s[w] - 1) {
        pred[w] = u;
        break;
      }
    }
  }

  SourceBest best;
  std::vector<Vertex> walk;
  for (Vertex t = 0; static_cast<std::size_t>(t) < g.n(); ++t) {
    walk.clear();
    for (Vertex v = t; v != -1; v = pred[v]) walk.push_back(v);
    std::reverse(walk.begin(), walk.end());

    // Multi-source BFS from the path, reusing scratch.
    std::fill(scratch.begin(), scratch.end(), kUnreached);
    queue.clear();
    for (Vertex v : walk) {
      scratch[v] = 0;
      queue.push_back(v);
    }
    int farthest = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      farthest = scratch[u];
      if (farthest >= best.eccentricity) break;
      for (Vertex w : g.neighbors(u)) {
        if (scratch[w] == kUnreached) {
          scratch[w] = scratch[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (farthest < best.eccentricity) best = {farthest, Path{walk}};
  }
  return best;
}

MespResult heuristic_result(SourceBest best) {
  return MespResult{std::move(best.path), best.eccentricity, MespMethod::AllPairsHeuristic, std::nullopt};
}

}  // namespace

MespResult exact_mesp_small(const Graph& g, ExactMespLimits limits) {
  if (g.n() > limits.max_vertices) {
    throw Error(ErrorKind::CapExceeded, "exact MESP limited to " + std::to_string(limits.max_vertices) + " vertices");
  }
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  ShortestPathEnumerator paths(g, dist, limits.max_paths);

  MespResult best{Path{}, std::numeric_limits<int>::max(), MespMethod::ExactSmall, MespQuality{1.0, 0.0}};
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex s = 0; s < n && best.eccentricity > 0; ++s) {
    for (Vertex t = 0; t < n && best.eccentricity > 0; ++t) {
      paths.run(s, t, [&](std::span<const Vertex> candidate) {
        const int ecc = eccentricity_from_table(dist, candidate);
        if (ecc < best.eccentricity) {
          best.eccentricity = ecc;
          best.path = Path{{candidate.begin(), candidate.end()}};
        }
      });
    }
  }
  return best;
}

MespResult all_pairs_heuristic_serial(const Graph& g) {
  std::vector<int> scratch(g.n());
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  SourceBest best;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.n(); ++s) {
    SourceBest candidate = best_from_source(g, s, scratch, queue);
    if (candidate.eccentricity < best.eccentricity) best = std::move(candidate);
  }
  return heuristic_result(std::move(best));
}

MespResult all_pairs_heuristic(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.n());
  std::vector<SourceBest> per_source(g.n());
#pragma omp parallel
  {
    std::vector<int> scratch(g.n());
    std::vector<Vertex> queue;
    queue.reserve(g.n());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) per_source[s] = best_from_source(g, static_cast<Vertex>(s), scratch, queue);
  }
  // Reduce in source order so ties resolve exactly as in the serial scan.
  SourceBest best;
  for (auto& candidate : per_source) {
    if (candidate.eccentricity < best.eccentricity) best = std::move(candidate);
  }
  return heuristic_result(std::move(best));
}

std::optional<FinderKind> parse_finder(std::string_view name) {
  if (name == "exact-small") return FinderKind::ExactSmall;
  if (name == "all-pairs") return FinderKind::AllPairs;
  return std::nullopt;
}

PathFinder make_finder(FinderKind kind) {
  switch (kind) {
    case FinderKind::ExactSmall: return [](const Graph& g) { return exact_mesp_small(g); };
    case FinderKind::AllPairs: return [](const Graph& g) { return all_pairs_heuristic(g); };
  }
  return {};
}

SpbApproximation approximate_spb(const Graph& g, const PathFinder& finder) {
  MespResult found = finder(g);
  CenteredDecomposition result = construct_phi(g, found.path);
  return {std::move(found), std::move(result)};
}

double strong_breadth_bound(const MespQuality& quality, int spb) {
  return 4.0 * quality.phi * spb + 2.0 * quality.psi;
}

}  // namespace breadthkit
