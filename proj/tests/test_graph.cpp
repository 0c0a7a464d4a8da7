#include <gtest/gtest.h>

#include <random>

#include "breadthkit/error.hpp"
#include "breadthkit/generators.hpp"
#include "breadthkit/graph.hpp"
#include "breadthkit/graph_io.hpp"
#include "support/oracles.hpp"

namespace breadthkit {
namespace {

std::vector<Vertex> sorted(const VertexSet& s) { return s.sorted(); }

TEST(Graph, BuildsSortedSymmetricAdjacency) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 0}, {0, 1}, {3, 0}, {1, 0}});
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 4; ++v) degree_sum += g.degree(v);
  EXPECT_EQ(degree_sum, 2 * g.m());
}

TEST(Graph, RejectsSelfLoopsAndDisconnectedInput) {
  try {
    Graph::from_edges(2, std::vector<Edge>{{1, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SelfLoop);
  }
  try {
    Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(Bfs, CycleDistancesMatchFloydWarshall) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(bfs_distances(c6, 0), (std::vector<int>{0, 1, 2, 3, 2, 1}));
  const auto reference = testing::floyd_warshall(6, c6.edges());
  EXPECT_EQ(bfs_distances(c6, 0), reference[0]);
}

TEST(Bfs, SmallCases) {
  EXPECT_EQ(bfs_distances(complete_graph(2), 0), (std::vector<int>{0, 1}));
  const Graph g = grid_graph(3, 4);
  for (Vertex s = 0; s < 12; ++s) EXPECT_EQ(bfs_distances(g, s)[s], 0);
}

TEST(Ball, CycleRadiusTwo) {
  EXPECT_EQ(sorted(ball(cycle_graph(6), 0, 2)), (std::vector<Vertex>{0, 1, 2, 4, 5}));
}

TEST(Ball, IdentityAndSaturation) {
  const Graph g = grid_graph(3, 3);
  for (Vertex c = 0; c < 9; ++c) {
    EXPECT_EQ(sorted(ball(g, c, 0)), (std::vector<Vertex>{c}));
    EXPECT_EQ(ball(g, c, 4).size(), 9u);  // diameter of the 3x3 grid
    EXPECT_EQ(ball(g, c, 100).size(), 9u);
  }
}

TEST(Radius, ExamplesAgainstFloydWarshall) {
  EXPECT_EQ(eccentricity_radius(cycle_graph(6)).radius, 3);
  EXPECT_LE(eccentricity_radius(complete_graph(1)).radius, 1);
  EXPECT_LE(eccentricity_radius(complete_graph(5)).radius, 1);
  const RadiusCenter p5 = eccentricity_radius(path_graph(5));
  EXPECT_EQ(p5.radius, 2);
  EXPECT_EQ(p5.center, 2);

  const auto d = testing::floyd_warshall(5, path_graph(5).edges());
  int radius = 100;
  for (const auto& row : d) radius = std::min(radius, *std::max_element(row.begin(), row.end()));
  EXPECT_EQ(radius, 2);
}

// Properties on random connected graphs.
class RandomGraphs : public ::testing::Test {
 protected:
  std::vector<Graph> sample(std::size_t count, std::size_t max_n) {
    std::mt19937_64 rng(0xB5EEDu);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
      const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
      out.push_back(random_connected_graph(n, extra, rng));
    }
    return out;
  }
};

TEST_F(RandomGraphs, BfsSatisfiesEdgeTriangleInequality) {
  for (const Graph& g : sample(60, 40)) {
    for (Vertex s = 0; static_cast<std::size_t>(s) < g.n(); s += 3) {
      const auto d = bfs_distances(g, s);
      for (auto [u, v] : g.edges()) {
        EXPECT_LE(d[u], d[v] + 1);
        EXPECT_LE(d[v], d[u] + 1);
      }
    }
  }
}

TEST_F(RandomGraphs, BallAgreesWithBfsDistances) {
  for (const Graph& g : sample(40, 30)) {
    for (Vertex c = 0; static_cast<std::size_t>(c) < g.n(); c += 2) {
      const auto d = bfs_distances(g, c);
      for (int rho = 0; rho <= 5; ++rho) {
        std::vector<Vertex> expected;
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
          if (d[v] <= rho) expected.push_back(v);
        }
        EXPECT_EQ(sorted(ball(g, c, rho)), expected);
      }
    }
  }
}

TEST_F(RandomGraphs, AllPairsKernelsMatchFloydWarshall) {
  for (const Graph& g : sample(25, 35)) {
    const DistanceMatrix serial = all_pairs_distances_serial(g);
    const DistanceMatrix omp = all_pairs_distances(g);
    const auto reference = testing::floyd_warshall(g.n(), g.edges());
    for (Vertex u = 0; static_cast<std::size_t>(u) < g.n(); ++u) {
      for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
        ASSERT_EQ(serial(u, v), reference[u][v]);
        ASSERT_EQ(omp(u, v), reference[u][v]);
      }
    }
  }
}

TEST_F(RandomGraphs, EdgeListAndGraph6LoadIdentically) {
  for (const Graph& g : sample(30, 20)) {
    if (g.m() == 0) continue;  // K_1 has no edge-list form
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

}  // namespace
}  // namespace breadthkit
