#include "breadthkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "breadthkit/error.hpp"

namespace breadthkit {

namespace {

constexpr std::size_t kMaxCodeOrder = 11;

std::size_t pair_bits(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t bit_index(Vertex row, Vertex col) {
  return static_cast<std::size_t>(col) * (col - 1) / 2 + row;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.n()), total_bits_(pair_bits(g.n())), adj_(g.n(), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
    order_.reserve(n_);
  }

  CanonicalForm run() {
    extend(0, false);
    return {best_code_, best_order_};
  }

 private:
  // `ahead` means the current prefix is already strictly below the best
  // code, so no further comparisons are needed on this branch.
  void extend(std::uint64_t prefix, bool ahead) {
    const std::size_t depth = order_.size();
    if (depth == n_) {
      if (!have_best_ || prefix < best_code_) {
        best_code_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t prefix_bits = depth * (depth + 1) / 2;
    for (Vertex x = 0; static_cast<std::size_t>(x) < n_; ++x) {
      if (used_ & (1u << x)) continue;
      std::uint64_t next = prefix;
      for (std::size_t r = 0; r < depth; ++r) next = (next << 1) | ((adj_[order_[r]] >> x) & 1u);
      bool next_ahead = ahead;
      if (have_best_ && !ahead) {
        const std::uint64_t best_prefix = best_code_ >> (total_bits_ - prefix_bits);
        if (next > best_prefix) continue;
        next_ahead = next < best_prefix;
      }
      used_ |= 1u << x;
      order_.push_back(x);
      extend(next, next_ahead);
      order_.pop_back();
      used_ &= ~(1u << x);
    }
  }

  std::size_t n_;
  std::size_t total_bits_;
  std::vector<std::uint32_t> adj_;
  std::vector<Vertex> order_;
  std::uint32_t used_ = 0;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_order_;
};

}  // namespace

std::uint64_t adjacency_code(std::size_t n, std::span<const Edge> edges) {
  const std::size_t bits = pair_bits(n);
  std::uint64_t code = 0;
  for (auto [u, v] : edges) {
    const Vertex r = std::min(u, v);
    const Vertex c = std::max(u, v);
    code |= std::uint64_t{1} << (bits - 1 - bit_index(r, c));
  }
  return code;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.n() > kMaxCodeOrder) {
    throw Error(ErrorKind::CapExceeded, "canonical form limited to " + std::to_string(kMaxCodeOrder) + " vertices");
  }
  return CanonicalSearch(g).run();
}

namespace {

Graph relabel(const Graph& g, std::span<const Vertex> order) {
  std::vector<Vertex> position(g.n());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph::from_edges(g.n(), edges);
}

}  // namespace

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).order); }

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "enumeration needs at least one vertex");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::CapExceeded,
                "exhaustive enumeration capped at n = " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (std::size_t k = 2; k <= n; ++k) {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller representative by one vertex reaches all classes.
    std::map<std::uint64_t, Graph> classes;
    const auto new_vertex = static_cast<Vertex>(k - 1);
    for (const Graph& base : level) {
      const std::vector<Edge> base_edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (Vertex v = 0; v < new_vertex; ++v) {
          if (mask & (1u << v)) edges.emplace_back(v, new_vertex);
        }
        Graph candidate = Graph::from_edges(k, edges);
        const CanonicalForm form = canonical_form(candidate);
        if (classes.contains(form.code)) continue;
        classes.emplace(form.code, relabel(candidate, form.order));
      }
    }
    level.clear();
    for (auto& [code, graph] : classes) level.push_back(std::move(graph));
  }
  return level;
}

std::vector<Graph> connected_graph_corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected_graphs(n);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace breadthkit
