#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string_view>

#include "breadthkit/constructor.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// Spine 0..spine-1 with one pendant leaf (spine + i) on every spine vertex.
Graph caterpillar_graph(std::size_t spine);
/// rows x cols grid; vertex (i, j) is i * cols + j.
Graph grid_graph(std::size_t rows, std::size_t cols);
/// Center 0 and `legs` paths of `leg_length` vertices each.
Graph spider_graph(std::size_t legs, std::size_t leg_length);

/// Random spanning tree (uniform attachment over a shuffled labelling) plus
/// `extra_edges` uniformly random extra pairs (duplicates collapse).
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::mt19937_64& rng);

/// A diametral pair chosen uniformly at random, joined by a uniformly
/// random choice of BFS predecessor at every step.
Path random_diametral_path(const Graph& g, std::mt19937_64& rng);

enum class Family { Cycle, Caterpillar, Grid };

std::optional<Family> parse_family(std::string_view name);

struct FamilyInstance {
  Graph graph;
  Path path;  // fixed diametral shortest path
};

/// Instance with roughly `size` vertices:
///   cycle: C_size, path 0..floor(size/2)
///   caterpillar: spine size/2, path leaf - spine - leaf
///   grid: side round(sqrt(size)), path along the top row then the right column
FamilyInstance make_family_instance(Family family, std::size_t size);

}  // namespace breadthkit
