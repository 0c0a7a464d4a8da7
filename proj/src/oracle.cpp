#include "breadthkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>

#include "breadthkit/error.hpp"

namespace breadthkit {

namespace {

constexpr std::size_t kMaxMaskOrder = 11;  // edge masks fit in 64 bits

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.n() > cap || g.n() > kMaxMaskOrder) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + " limited to " +
                                            std::to_string(std::min(cap, kMaxMaskOrder)) + " vertices, got " +
                                            std::to_string(g.n()));
  }
}

}  // namespace

PathDecomposition layout_decomposition(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> position(g.n());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  // Last position of any neighbor; v_j stays in bags j..reach[j].
  std::vector<std::size_t> reach(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    reach[j] = j;
    for (Vertex w : g.neighbors(order[j])) reach[j] = std::max(reach[j], position[w]);
  }
  std::vector<VertexSet> bags;
  bags.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Vertex> bag;
    for (std::size_t j = 0; j < i; ++j) {
      if (reach[j] >= i) bag.push_back(order[j]);
    }
    bag.push_back(order[i]);
    bags.emplace_back(std::move(bag));
  }
  return PathDecomposition(std::move(bags));
}

OracleResult exact_pathbreadth(const Graph& g, std::size_t max_vertices) {
  check_cap(g, max_vertices, "exact pathbreadth");
  const std::size_t n = g.n();
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

  auto bag_breadth = [&](std::uint32_t placed, Vertex next) {
    std::uint32_t bag = 1u << next;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
      if ((placed >> u & 1u) && (nbr[u] & ~placed)) bag |= 1u << u;
    }
    int best = std::numeric_limits<int>::max();
    for (Vertex w = 0; static_cast<std::size_t>(w) < n; ++w) {
      int reach = 0;
      for (std::uint32_t rest = bag; rest != 0; rest &= rest - 1) {
        reach = std::max(reach, dist(w, static_cast<Vertex>(std::countr_zero(rest))));
      }
      best = std::min(best, reach);
    }
    return best;
  };

  // cost[S]: best achievable max breadth for the bags still to come once the
  // set S has been placed.
  std::vector<int> cost(std::size_t{1} << n, std::numeric_limits<int>::max());
  std::vector<Vertex> choice(std::size_t{1} << n, -1);
  cost[full] = 0;
  for (std::int64_t s = static_cast<std::int64_t>(full) - 1; s >= 0; --s) {
    const auto placed = static_cast<std::uint32_t>(s);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
      if (placed >> v & 1u) continue;
      const int candidate = std::max(bag_breadth(placed, v), cost[placed | (1u << v)]);
      if (candidate < cost[placed]) {
        cost[placed] = candidate;
        choice[placed] = v;
      }
    }
  }

  OracleResult out;
  out.value = cost[0];
  for (std::uint32_t placed = 0; placed != full; placed |= 1u << out.layout.back()) out.layout.push_back(choice[placed]);
  out.witness = layout_decomposition(g, out.layout);
  return out;
}

namespace {

class CenterSequenceSearch {
 public:
  CenterSequenceSearch(const Graph& g, const DistanceMatrix& dist, int radius) : n_(g.n()) {
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    all_edges_ = edges.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << edges.size()) - 1);
    all_vertices_ = (1u << n_) - 1;
    incident_.assign(n_, 0);
    ball_.assign(n_, 0);
    ball_edges_.assign(n_, 0);
    for (Vertex c = 0; static_cast<std::size_t>(c) < n_; ++c) {
      for (Vertex v = 0; static_cast<std::size_t>(v) < n_; ++v) {
        if (dist(c, v) <= radius) ball_[c] |= 1u << v;
      }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      incident_[u] |= std::uint64_t{1} << e;
      incident_[v] |= std::uint64_t{1} << e;
      for (std::size_t c = 0; c < n_; ++c) {
        if ((ball_[c] >> u & 1u) && (ball_[c] >> v & 1u)) ball_edges_[c] |= std::uint64_t{1} << e;
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    for (Vertex first = 0; static_cast<std::size_t>(first) < n_; ++first) {
      sequence_.assign(1, first);
      if (extend(ball_[first], 0, ball_edges_[first], 1u << first)) return sequence_;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::uint32_t seen, std::uint32_t closed, std::uint64_t covered, std::uint32_t used) {
    if (seen == all_vertices_ && covered == all_edges_) return true;
    const std::uint32_t current = ball_[sequence_.back()];
    for (Vertex c = 0; static_cast<std::size_t>(c) < n_; ++c) {
      if (used >> c & 1u) continue;
      const std::uint32_t next = ball_[c];
      if (next & closed) continue;
      // Vertices leaving now never return, so their edges must be done.
      const std::uint32_t leaving = current & ~next;
      bool ready = true;
      for (std::uint32_t rest = leaving; rest != 0 && ready; rest &= rest - 1) {
        const std::uint64_t need = incident_[std::countr_zero(rest)];
        ready = (need & covered) == need;
      }
      if (!ready) continue;
      sequence_.push_back(c);
      if (extend(seen | next, closed | leaving, covered | ball_edges_[c], used | (1u << c))) return true;
      sequence_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::uint32_t all_vertices_ = 0;
  std::uint64_t all_edges_ = 0;
  std::vector<std::uint32_t> ball_;
  std::vector<std::uint64_t> ball_edges_;
  std::vector<std::uint64_t> incident_;
  std::vector<Vertex> sequence_;
};

}  // namespace

OracleResult exact_strong_pathbreadth(const Graph& g, std::size_t max_vertices) {
  check_cap(g, max_vertices, "exact strong pathbreadth");
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  const int radius_bound = eccentricity_radius(g).radius;
  for (int rho = 0; rho <= radius_bound; ++rho) {
    auto centers = CenterSequenceSearch(g, dist, rho).run();
    if (!centers) continue;
    std::vector<VertexSet> bags;
    for (Vertex c : *centers) bags.push_back(ball(g, c, rho));
    return OracleResult{rho, PathDecomposition(std::move(bags)), std::move(*centers), {}};
  }
  // Unreachable for a connected graph: the radius ball of a center is V.
  throw Error(ErrorKind::InvalidDecomposition, "no strong decomposition up to the graph radius");
}

Theorem1Report verify_theorem1(const Graph& g) {
  Theorem1Report r;
  r.pb = exact_pathbreadth(g).value;
  r.spb = exact_strong_pathbreadth(g).value;
  r.holds = r.pb <= r.spb && r.spb <= 4 * r.pb;
  return r;
}

std::vector<Theorem1Report> sweep_theorem1_serial(std::span<const Graph> corpus) {
  std::vector<Theorem1Report> out;
  out.reserve(corpus.size());
  for (const Graph& g : corpus) out.push_back(verify_theorem1(g));
  return out;
}

std::vector<Theorem1Report> sweep_theorem1(std::span<const Graph> corpus) {
  std::vector<Theorem1Report> out(corpus.size());
  const auto count = static_cast<std::int64_t>(corpus.size());
  // Exceptions cannot cross the parallel region; rethrow the first one after.
  std::vector<std::exception_ptr> failures(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[i] = verify_theorem1(corpus[i]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace breadthkit
