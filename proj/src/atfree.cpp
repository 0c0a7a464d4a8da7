#include "breadthkit/atfree.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace breadthkit {

AvoidanceComponents::AvoidanceComponents(const Graph& g) : n_(g.n()), labels_(g.n() * g.n(), -1) {
  const auto n = static_cast<std::int64_t>(n_);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n_);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t vi = 0; vi < n; ++vi) {
      const auto v = static_cast<Vertex>(vi);
      std::span<int> row(labels_.data() + static_cast<std::size_t>(v) * n_, n_);
      std::vector<bool> removed(n_, false);
      removed[v] = true;
      for (Vertex w : g.neighbors(v)) removed[w] = true;
      int next_label = 0;
      for (Vertex start = 0; static_cast<std::size_t>(start) < n_; ++start) {
        if (removed[start] || row[start] >= 0) continue;
        queue.assign(1, start);
        row[start] = next_label;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (Vertex w : g.neighbors(queue[head])) {
            if (!removed[w] && row[w] < 0) {
              row[w] = next_label;
              queue.push_back(w);
            }
          }
        }
        ++next_label;
      }
    }
  }
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
  const AvoidanceComponents avoid(g);
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (avoid.joined_avoiding(c, a, b) && avoid.joined_avoiding(b, a, c) && avoid.joined_avoiding(a, b, c)) {
          return AsteroidalTriple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_dominating_pair(const Graph& g, const AvoidanceComponents& avoid, Vertex x, Vertex y) {
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
    if (avoid.joined_avoiding(v, x, y)) return false;
  }
  return true;
}

namespace {

// Pairs x < y ordered by decreasing distance, then (x, y).
std::vector<DominatingPair> candidate_pairs(const Graph& g) {
  const DistanceMatrix dist = all_pairs_distances(g);
  std::vector<std::tuple<int, Vertex, Vertex>> keyed;
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) keyed.emplace_back(-dist(x, y), x, y);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<DominatingPair> out;
  out.reserve(keyed.size());
  for (auto [neg, x, y] : keyed) out.push_back({x, y});
  return out;
}

}  // namespace

std::optional<DominatingPair> find_dominating_pair_ecc1_serial(const Graph& g) {
  if (g.n() == 1) return DominatingPair{0, 0};
  const AvoidanceComponents avoid(g);
  for (const DominatingPair& p : candidate_pairs(g)) {
    if (is_dominating_pair(g, avoid, p.x, p.y)) return p;
  }
  return std::nullopt;
}

std::optional<DominatingPair> find_dominating_pair_ecc1(const Graph& g) {
  if (g.n() == 1) return DominatingPair{0, 0};
  const AvoidanceComponents avoid(g);
  const std::vector<DominatingPair> pairs = candidate_pairs(g);
  const auto count = static_cast<std::int64_t>(pairs.size());
  // Smallest qualifying position in scan order; later chunks stop early
  // once a smaller hit is known.
  std::int64_t first = count;
#pragma omp parallel for schedule(dynamic, 32) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i < first && is_dominating_pair(g, avoid, pairs[i].x, pairs[i].y)) first = i;
  }
  if (first == count) return std::nullopt;
  return pairs[first];
}

NotAtFreeError::NotAtFreeError(AsteroidalTriple witness)
    : Error(ErrorKind::NotATFree, "asteroidal triple {" + std::to_string(witness.a) + ", " + std::to_string(witness.b) +
                                      ", " + std::to_string(witness.c) + "}"),
      witness_(witness) {}

Path bfs_shortest_path(const Graph& g, Vertex x, Vertex y) {
  const std::vector<int> to_y = bfs_distances(g, y);
  Path path{{x}};
  Vertex cur = x;
  while (cur != y) {
    for (Vertex w : g.neighbors(cur)) {
      if (to_y[w] == to_y[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.vertices.push_back(cur);
  }
  return path;
}

AtFreeDecomposition atfree_strong_breadth2(const Graph& g, bool assume_atfree) {
  if (!assume_atfree) {
    if (auto triple = find_asteroidal_triple(g)) throw NotAtFreeError(*triple);
  }
  auto pair = find_dominating_pair_ecc1(g);
  if (!pair) throw Error(ErrorKind::NoDominatingPair, "no dominating pair found");
  return {*pair, construct_phi(g, bfs_shortest_path(g, pair->x, pair->y))};
}

}  // namespace breadthkit
