#include "breadthkit/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "breadthkit/error.hpp"

namespace breadthkit {

PathDecomposition PathDecomposition::from_bags(const Graph& g, std::vector<std::vector<Vertex>> bags) {
  std::vector<std::size_t> seen(g.n(), 0);
  std::vector<VertexSet> sets;
  sets.reserve(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (bags[i].empty()) throw Error(ErrorKind::MalformedDecomposition, "bag " + std::to_string(i) + " is empty");
    for (Vertex v : bags[i]) {
      if (!g.valid(v)) {
        throw Error(ErrorKind::MalformedDecomposition,
                    "bag " + std::to_string(i) + " names vertex " + std::to_string(v) + " not in the graph");
      }
      if (seen[v] == i + 1) {
        throw Error(ErrorKind::MalformedDecomposition,
                    "bag " + std::to_string(i) + " repeats vertex " + std::to_string(v));
      }
      seen[v] = i + 1;
    }
    sets.emplace_back(std::move(bags[i]));
  }
  return PathDecomposition(std::move(sets));
}

PathDecomposition::PathDecomposition(std::vector<VertexSet> bags) : bags_(std::move(bags)) {}

PathDecomposition PathDecomposition::reversed() const {
  return PathDecomposition(std::vector<VertexSet>(bags_.rbegin(), bags_.rend()));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::UncoveredVertex: return "UncoveredVertex";
    case ViolationKind::UncoveredEdge: return "UncoveredEdge";
    case ViolationKind::NonConsecutive: return "NonConsecutive";
  }
  return "Unknown";
}

std::string ViolationReport::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  switch (kind) {
    case ViolationKind::UncoveredVertex:
      out << ": vertex " << vertex << " is in no bag";
      break;
    case ViolationKind::UncoveredEdge:
      out << ": edge " << edge.first << "-" << edge.second << " shares no bag";
      break;
    case ViolationKind::NonConsecutive:
      out << ": vertex " << vertex << " in bags " << bags[0] << " and " << bags[2] << " but not " << bags[1];
      break;
  }
  return out.str();
}

namespace {

// For every vertex, the ascending indices of the bags holding it (CSR).
struct Membership {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> bag_ids;

  std::span<const std::size_t> of(Vertex v) const {
    return {bag_ids.data() + offsets[v], bag_ids.data() + offsets[v + 1]};
  }
};

Membership membership(std::size_t n, const PathDecomposition& phi) {
  Membership m;
  m.offsets.assign(n + 1, 0);
  for (const VertexSet& bag : phi.bags()) {
    for (Vertex v : bag) ++m.offsets[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) m.offsets[v + 1] += m.offsets[v];
  m.bag_ids.resize(m.offsets[n]);
  std::vector<std::size_t> cursor(m.offsets.begin(), m.offsets.end() - 1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (Vertex v : phi[i]) m.bag_ids[cursor[v]++] = i;
  }
  return m;
}

bool share_bag(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

void require_valid(const Graph& g, const PathDecomposition& phi) {
  if (auto violation = validate(g, phi)) throw Error(ErrorKind::InvalidDecomposition, violation->describe());
}

}  // namespace

std::optional<ViolationReport> validate(const Graph& g, const PathDecomposition& phi) {
  const Membership member = membership(g.n(), phi);
  const auto n = static_cast<Vertex>(g.n());

  for (Vertex v = 0; v < n; ++v) {
    if (member.of(v).empty()) return ViolationReport{ViolationKind::UncoveredVertex, v, {v, v}, {}};
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && !share_bag(member.of(u), member.of(v))) {
        auto held = member.of(u);
        return ViolationReport{ViolationKind::UncoveredEdge, u, {u, v}, {held.begin(), held.end()}};
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    auto ids = member.of(v);
    for (std::size_t t = 0; t + 1 < ids.size(); ++t) {
      if (ids[t + 1] != ids[t] + 1) {
        return ViolationReport{ViolationKind::NonConsecutive, v, {v, v}, {ids[t], ids[t] + 1, ids[t + 1]}};
      }
    }
  }
  return std::nullopt;
}

std::size_t width(const PathDecomposition& phi) {
  if (phi.empty()) throw Error(ErrorKind::EmptyDecomposition, "decomposition has no bags");
  std::size_t largest = 0;
  for (const VertexSet& bag : phi.bags()) largest = std::max(largest, bag.size());
  return largest - 1;
}

int breadth(const Graph& g, const PathDecomposition& phi) {
  return breadth(g, all_pairs_distances(g), phi);
}

int breadth(const Graph& g, const DistanceMatrix& dist, const PathDecomposition& phi) {
  require_valid(g, phi);
  int result = 0;
  for (const VertexSet& bag : phi.bags()) {
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.n() && best > result; ++v) {
      int reach = 0;
      for (Vertex x : bag) reach = std::max(reach, dist(v, x));
      best = std::min(best, reach);
    }
    result = std::max(result, best);
  }
  return result;
}

std::optional<StrongBreadth> strong_breadth_witness(const Graph& g, const DistanceMatrix& dist,
                                                    const PathDecomposition& phi) {
  require_valid(g, phi);
  const int diameter = dist.diameter();
  const std::size_t n = g.n();
  const auto levels = static_cast<std::size_t>(diameter) + 1;

  // ball_size[v * levels + r] = |N^r[v]|
  std::vector<std::size_t> ball_size(n * levels, 0);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    std::size_t* row = ball_size.data() + static_cast<std::size_t>(v) * levels;
    for (int d : dist.row(v)) ++row[d];
    for (std::size_t r = 1; r < levels; ++r) row[r] += row[r - 1];
  }

  // A ball equal to a bag is centered inside it. For each candidate center
  // the radii where N^r[center] == bag form one interval [lo, hi].
  struct Interval {
    Vertex center;
    int lo;
    int hi;
  };
  std::vector<std::vector<Interval>> windows(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const VertexSet& bag = phi[i];
    for (Vertex c : bag) {
      int reach = 0;
      for (Vertex x : bag) reach = std::max(reach, dist(c, x));
      const std::size_t* row = ball_size.data() + static_cast<std::size_t>(c) * levels;
      if (row[reach] != bag.size()) continue;
      int hi = reach;
      while (hi + 1 <= diameter && row[hi + 1] == bag.size()) ++hi;
      windows[i].push_back({c, reach, hi});
    }
  }

  for (int r = 0; r <= diameter; ++r) {
    StrongBreadth found{r, {}};
    for (const auto& options : windows) {
      auto hit = std::find_if(options.begin(), options.end(), [r](const Interval& w) { return w.lo <= r && r <= w.hi; });
      if (hit == options.end()) break;
      found.centers.push_back(hit->center);
    }
    if (found.centers.size() == phi.size()) return found;
  }
  return std::nullopt;
}

std::optional<int> strong_breadth(const Graph& g, const DistanceMatrix& dist, const PathDecomposition& phi) {
  auto witness = strong_breadth_witness(g, dist, phi);
  if (!witness) return std::nullopt;
  return witness->radius;
}

std::optional<int> strong_breadth(const Graph& g, const PathDecomposition& phi) {
  return strong_breadth(g, all_pairs_distances(g), phi);
}

}  // namespace breadthkit
