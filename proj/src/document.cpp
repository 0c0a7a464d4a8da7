#include "breadthkit/document.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "breadthkit/error.hpp"

namespace breadthkit {

using nlohmann::json;

namespace {

std::vector<std::int64_t> int_array(const json& value, const char* field) {
  if (!value.is_array()) throw Error(ErrorKind::MalformedDocument, std::string("`") + field + "` must be an array");
  std::vector<std::int64_t> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_number_integer()) {
      throw Error(ErrorKind::MalformedDocument, std::string("`") + field + "` must hold integers");
    }
    out.push_back(item.get<std::int64_t>());
  }
  return out;
}

int int_field(const json& value, const char* field) {
  if (!value.is_number_integer()) throw Error(ErrorKind::MalformedDocument, std::string("`") + field + "` must be an integer");
  return value.get<int>();
}

}  // namespace

DecompositionDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, e.what());
  }
  if (!root.is_object()) throw Error(ErrorKind::MalformedDocument, "document must be a JSON object");
  if (!root.contains("bags")) throw Error(ErrorKind::MalformedDocument, "missing `bags`");
  const json& bags = root.at("bags");
  if (!bags.is_array()) throw Error(ErrorKind::MalformedDocument, "`bags` must be an array of arrays");

  DecompositionDocument doc;
  for (const json& bag : bags) {
    doc.bags.push_back(int_array(bag, "bags"));
    if (doc.bags.back().empty()) {
      throw Error(ErrorKind::MalformedDocument, "bag " + std::to_string(doc.bags.size() - 1) + " is empty");
    }
  }
  if (root.contains("centers")) doc.centers = int_array(root.at("centers"), "centers");
  if (root.contains("radius")) doc.radius = int_field(root.at("radius"), "radius");
  if (root.contains("parameter")) doc.parameter = int_field(root.at("parameter"), "parameter");
  return doc;
}

std::string serialize(const DecompositionDocument& doc) {
  json root;
  root["bags"] = json::array();
  for (auto bag : doc.bags) {
    std::sort(bag.begin(), bag.end());
    root["bags"].push_back(bag);
  }
  if (doc.centers) root["centers"] = *doc.centers;
  if (doc.radius) root["radius"] = *doc.radius;
  if (doc.parameter) root["parameter"] = *doc.parameter;
  return root.dump();
}

DecompositionDocument make_document(const Graph& g, const PathDecomposition& phi) {
  DecompositionDocument doc;
  doc.bags.reserve(phi.size());
  for (const VertexSet& bag : phi.bags()) {
    std::vector<std::int64_t> labels;
    labels.reserve(bag.size());
    for (Vertex v : bag) labels.push_back(g.label(v));
    doc.bags.push_back(std::move(labels));
  }
  return doc;
}

DecompositionDocument make_document(const Graph& g, const CenteredDecomposition& result) {
  DecompositionDocument doc = make_document(g, result.decomposition);
  std::vector<std::int64_t> centers;
  for (Vertex q : result.centers) centers.push_back(g.label(q));
  doc.centers = std::move(centers);
  doc.radius = result.radius;
  return doc;
}

PathDecomposition to_decomposition(const Graph& g, const DecompositionDocument& doc) {
  std::unordered_map<std::int64_t, Vertex> index;
  if (!g.has_identity_labels()) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) index.emplace(g.label(v), v);
  }
  auto lookup = [&](std::int64_t label) -> Vertex {
    if (g.has_identity_labels()) {
      if (label < 0 || static_cast<std::size_t>(label) >= g.n()) {
        throw Error(ErrorKind::MalformedDecomposition, "unknown vertex label " + std::to_string(label));
      }
      return static_cast<Vertex>(label);
    }
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorKind::MalformedDecomposition, "unknown vertex label " + std::to_string(label));
    return it->second;
  };
  std::vector<std::vector<Vertex>> bags;
  bags.reserve(doc.bags.size());
  for (const auto& bag : doc.bags) {
    std::vector<Vertex> dense;
    dense.reserve(bag.size());
    for (std::int64_t label : bag) dense.push_back(lookup(label));
    bags.push_back(std::move(dense));
  }
  return PathDecomposition::from_bags(g, std::move(bags));
}

}  // namespace breadthkit
