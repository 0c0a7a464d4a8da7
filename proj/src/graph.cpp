#include "breadthkit/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "breadthkit/error.hpp"

namespace breadthkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedBitVector: return "TruncatedBitVector";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorKind::EmptyDecomposition: return "EmptyDecomposition";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::PathNotInGraph: return "PathNotInGraph";
    case ErrorKind::NotAShortestPath: return "NotAShortestPath";
    case ErrorKind::NotATFree: return "NotATFree";
    case ErrorKind::NoDominatingPair: return "NoDominatingPair";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::find(members_.begin(), members_.end(), v) != members_.end();
}

std::vector<Vertex> VertexSet::sorted() const {
  std::vector<Vertex> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  return a.size() == b.size() && a.sorted() == b.sorted();
}

namespace {

// Union-find over edges; cheaper to set up than adjacency when all we need
// is a yes/no answer.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_connected(std::size_t n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  DisjointSets sets(n);
  std::size_t components = n;
  for (auto [u, v] : edges) {
    if (sets.unite(u, v)) --components;
  }
  return components == 1;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw Error(ErrorKind::VertexOutOfRange, "too many vertices: " + std::to_string(n));
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop on vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  if (!is_connected(n, normalized)) throw Error(ErrorKind::Disconnected, "graph is not connected");

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in this order leaves every list sorted:
  // u's list receives its smaller neighbors first (as the second endpoint)...
  for (auto [u, v] : normalized) g.neighbors_[cursor[v]++] = u;
  // ...then its larger neighbors in ascending order.
  for (auto [u, v] : normalized) g.neighbors_[cursor[u]++] = v;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; static_cast<std::size_t>(u) < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  bool identity = true;
  for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i] == static_cast<std::int64_t>(i);
  if (identity) {
    labels_.clear();
  } else {
    labels_ = std::move(labels);
  }
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.n(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, Vertex center, int radius) {
  std::vector<int> dist(g.n(), kUnreached);
  std::vector<Vertex> members{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Vertex u = members[head];
    if (dist[u] >= radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
      }
    }
  }
  return VertexSet(std::move(members));
}

RadiusCenter eccentricity_radius(const Graph& g) {
  const DistanceMatrix d = all_pairs_distances(g);
  RadiusCenter best{std::numeric_limits<int>::max(), 0};
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
    const int e = d.eccentricity(v);
    if (e < best.radius) best = {e, v};
  }
  return best;
}

int DistanceMatrix::diameter() const noexcept {
  return n_ == 0 ? 0 : *std::max_element(d_.begin(), d_.end());
}

int DistanceMatrix::eccentricity(Vertex v) const noexcept {
  auto r = row(v);
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

namespace {

void bfs_into(const Graph& g, Vertex source, std::span<int> dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  DistanceMatrix d(g.n());
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.n(); ++s) bfs_into(g, s, d.row(s), queue);
  return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.n());
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(g.n());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) bfs_into(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
  }
  return d;
}

}  // namespace breadthkit
