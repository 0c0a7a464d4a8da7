#include "breadthkit/constructor.hpp"

#include <algorithm>
#include <string>

#include "breadthkit/error.hpp"

namespace breadthkit {

namespace {

void require_in_graph(const Graph& g, const Path& path) {
  if (path.vertices.empty()) throw Error(ErrorKind::PathNotInGraph, "path has no vertices");
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const Vertex v = path[i];
    if (!g.valid(v)) throw Error(ErrorKind::PathNotInGraph, "vertex " + std::to_string(v) + " not in the graph");
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      throw Error(ErrorKind::PathNotInGraph,
                  "vertices " + std::to_string(path[i - 1]) + " and " + std::to_string(v) + " are not adjacent");
    }
  }
}

// Distance-limited BFS from `center` into `members`, using `dist` as
// scratch. `dist` must be all kUnreached on entry and is restored on exit.
void grow_ball(const Graph& g, Vertex center, int radius, std::vector<int>& dist, std::vector<Vertex>& members,
               BfsWork& work) {
  members.clear();
  members.push_back(center);
  dist[center] = 0;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Vertex u = members[head];
    if (dist[u] >= radius) continue;
    const auto nb = g.neighbors(u);
    work.adjacency_scans += nb.size();
    for (Vertex w : nb) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
      }
    }
  }
  work.vertices_settled += members.size();
  for (Vertex v : members) dist[v] = kUnreached;
}

CenteredDecomposition plan(const Graph& g, const Path& path) {
  if (!is_shortest_path(g, path)) throw Error(ErrorKind::NotAShortestPath, "input path is not a shortest path");

  CenteredDecomposition out;
  out.path = path;
  out.lambda = path_eccentricity(g, path);
  const std::size_t ell = path.length();
  if (out.lambda >= 1) {
    out.spacing = 2 * static_cast<std::size_t>(out.lambda);
    out.radius = 2 * out.lambda;
  } else if (ell == 0) {
    // Single-vertex graph.
    out.spacing = 1;
    out.radius = 0;
  } else {
    out.spacing = 2;
    out.radius = 1;
  }
  out.last_index = ell / out.spacing;
  out.offset = (ell % out.spacing) / 2;
  out.centers.reserve(out.last_index + 1);
  for (std::size_t i = 0; i <= out.last_index; ++i) out.centers.push_back(path[out.spacing * i + out.offset]);
  return out;
}

}  // namespace

int path_eccentricity(const Graph& g, const Path& path) {
  require_in_graph(g, path);
  std::vector<int> dist(g.n(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex v : path.vertices) {
    if (dist[v] == kUnreached) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  int farthest = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    farthest = dist[u];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return farthest;
}

bool is_shortest_path(const Graph& g, const Path& path) {
  if (path.vertices.empty()) return false;
  std::vector<bool> seen(g.n(), false);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const Vertex v = path[i];
    if (!g.valid(v) || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  const auto dist = bfs_distances(g, path.vertices.front());
  return static_cast<std::size_t>(dist[path.vertices.back()]) == path.length();
}

CenteredDecomposition construct_phi_serial(const Graph& g, const Path& path) {
  CenteredDecomposition out = plan(g, path);
  std::vector<int> dist(g.n(), kUnreached);
  std::vector<VertexSet> bags;
  bags.reserve(out.centers.size());
  std::vector<Vertex> members;
  for (Vertex q : out.centers) {
    grow_ball(g, q, out.radius, dist, members, out.work);
    bags.emplace_back(members);
  }
  out.decomposition = PathDecomposition(std::move(bags));
  return out;
}

CenteredDecomposition construct_phi(const Graph& g, const Path& path) {
  CenteredDecomposition out = plan(g, path);
  const auto count = static_cast<std::int64_t>(out.centers.size());
  std::vector<std::vector<Vertex>> members(out.centers.size());
  std::vector<BfsWork> work(out.centers.size());
#pragma omp parallel if (count > 1)
  {
    std::vector<int> dist(g.n(), kUnreached);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) grow_ball(g, out.centers[i], out.radius, dist, members[i], work[i]);
  }
  std::vector<VertexSet> bags;
  bags.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    bags.emplace_back(std::move(members[i]));
    out.work.vertices_settled += work[i].vertices_settled;
    out.work.adjacency_scans += work[i].adjacency_scans;
  }
  out.decomposition = PathDecomposition(std::move(bags));
  return out;
}

MembershipHistogram bag_membership_histogram(const Graph& g, const PathDecomposition& phi) {
  // Edge counts are indexed by the adjacency slot of (u, v) with u < v.
  std::vector<std::size_t> vertex_count(g.n(), 0);
  std::vector<std::size_t> edge_count(2 * g.m(), 0);
  std::vector<std::size_t> mark(g.n(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (Vertex v : phi[i]) mark[v] = i + 1;
    for (Vertex u : phi[i]) {
      ++vertex_count[u];
      const auto nb = g.neighbors(u);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (u < nb[k] && mark[nb[k]] == i + 1) ++edge_count[g.offset(u) + k];
      }
    }
  }
  MembershipHistogram h;
  if (!vertex_count.empty()) h.max_bags_per_vertex = *std::max_element(vertex_count.begin(), vertex_count.end());
  if (!edge_count.empty()) h.max_bags_per_edge = *std::max_element(edge_count.begin(), edge_count.end());
  return h;
}

}  // namespace breadthkit
