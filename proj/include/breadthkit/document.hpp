#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "breadthkit/constructor.hpp"
#include "breadthkit/decomposition.hpp"
#include "breadthkit/graph.hpp"

namespace breadthkit {

/// JSON interchange document:
///   {"bags": [[int]], "centers": [int], "radius": int, "parameter": int}
/// with `centers`, `radius` and `parameter` optional. Vertices are written
/// with the graph's original input labels.
struct DecompositionDocument {
  std::vector<std::vector<std::int64_t>> bags;
  std::optional<std::vector<std::int64_t>> centers;
  std::optional<int> radius;
  std::optional<int> parameter;
};

/// Throws MalformedDocument on invalid JSON, a missing or mistyped field, or
/// an empty bag.
DecompositionDocument parse_document(std::string_view text);

/// Compact single-line JSON; bags are written in ascending label order.
std::string serialize(const DecompositionDocument& doc);

DecompositionDocument make_document(const Graph& g, const PathDecomposition& phi);
DecompositionDocument make_document(const Graph& g, const CenteredDecomposition& result);

/// Maps labels back to dense vertices. Throws MalformedDecomposition on an
/// unknown label or a repeated vertex in one bag.
PathDecomposition to_decomposition(const Graph& g, const DecompositionDocument& doc);

}  // namespace breadthkit
