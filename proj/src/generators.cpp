#include "breadthkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "breadthkit/error.hpp"

namespace breadthkit {

namespace {

Vertex vtx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(vtx(i), vtx(i + 1));
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vtx(i), vtx((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(vtx(i), vtx(j));
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, vtx(i));
  return Graph::from_edges(leaves + 1, edges);
}

Graph caterpillar_graph(std::size_t spine) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spine; ++i) {
    if (i + 1 < spine) edges.emplace_back(vtx(i), vtx(i + 1));
    edges.emplace_back(vtx(i), vtx(spine + i));
  }
  return Graph::from_edges(2 * spine, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t v = i * cols + j;
      if (j + 1 < cols) edges.emplace_back(vtx(v), vtx(v + 1));
      if (i + 1 < rows) edges.emplace_back(vtx(v), vtx(v + cols));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph spider_graph(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> edges;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    const std::size_t base = 1 + leg * leg_length;
    for (std::size_t k = 0; k < leg_length; ++k) edges.emplace_back(vtx(k == 0 ? 0 : base + k - 1), vtx(base + k));
  }
  return Graph::from_edges(1 + legs * leg_length, edges);
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::mt19937_64& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.emplace_back(label[i], label[parent(rng)]);
  }
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
    for (std::size_t k = 0; k < extra_edges; ++k) {
      const Vertex u = any(rng);
      const Vertex v = any(rng);
      if (u != v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Path random_diametral_path(const Graph& g, std::mt19937_64& rng) {
  const DistanceMatrix dist = all_pairs_distances(g);
  const int diameter = dist.diameter();
  std::vector<Edge> ends;
  for (Vertex u = 0; static_cast<std::size_t>(u) < g.n(); ++u) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
      if (dist(u, v) == diameter) ends.emplace_back(u, v);
    }
  }
  const auto [s, t] = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
  Path path{{s}};
  std::vector<Vertex> steps;
  for (Vertex cur = s; cur != t;) {
    steps.clear();
    for (Vertex w : g.neighbors(cur)) {
      if (dist(w, t) == dist(cur, t) - 1) steps.push_back(w);
    }
    cur = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
    path.vertices.push_back(cur);
  }
  return path;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "caterpillar") return Family::Caterpillar;
  if (name == "grid") return Family::Grid;
  return std::nullopt;
}

FamilyInstance make_family_instance(Family family, std::size_t size) {
  switch (family) {
    case Family::Cycle: {
      if (size < 3) throw Error(ErrorKind::EmptyGraph, "cycle needs at least 3 vertices");
      Path p;
      for (std::size_t i = 0; i <= size / 2; ++i) p.vertices.push_back(vtx(i));
      return {cycle_graph(size), std::move(p)};
    }
    case Family::Caterpillar: {
      const std::size_t spine = std::max<std::size_t>(size / 2, 1);
      Path p{{vtx(spine)}};
      for (std::size_t i = 0; i < spine; ++i) p.vertices.push_back(vtx(i));
      if (spine > 1) p.vertices.push_back(vtx(2 * spine - 1));
      return {caterpillar_graph(spine), std::move(p)};
    }
    case Family::Grid: {
      const auto side = std::max<std::size_t>(
          static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(size)))), 1);
      Path p;
      for (std::size_t j = 0; j < side; ++j) p.vertices.push_back(vtx(j));
      for (std::size_t i = 1; i < side; ++i) p.vertices.push_back(vtx(i * side + side - 1));
      return {grid_graph(side, side), std::move(p)};
    }
  }
  throw Error(ErrorKind::MalformedLine, "unknown family");
}

}  // namespace breadthkit
