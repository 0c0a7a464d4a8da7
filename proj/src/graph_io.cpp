#include "breadthkit/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "breadthkit/error.hpp"

namespace breadthkit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_label(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw Error(ErrorKind::MalformedLine,
                "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a non-negative integer");
  }
  return value;
}

constexpr int kGraph6Offset = 63;
constexpr int kGraph6Max = 126;

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (tokens.size() != 2) {
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected two vertex labels, got " +
                      std::to_string(tokens.size()) + " tokens");
    }
    const auto u = parse_label(tokens[0], line_no);
    const auto v = parse_label(tokens[1], line_no);
    if (u == v) throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": self-loop on " + std::to_string(u));
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw Error(ErrorKind::EmptyGraph, "edge list contains no edges");

  std::vector<std::int64_t> labels;
  labels.reserve(2 * raw.size());
  for (auto [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index_of = [&](std::int64_t label) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
  Graph g = Graph::from_edges(labels.size(), edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph parse_graph6(std::string_view line) {
  std::string_view s = trim(line);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw Error(ErrorKind::BadHeader, "empty graph6 line");

  auto byte = [&](std::size_t i) -> int {
    const int c = static_cast<unsigned char>(s[i]);
    return c;
  };
  auto header_byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) throw Error(ErrorKind::BadHeader, "size header cut short");
    const int c = byte(i);
    if (c < kGraph6Offset || c > kGraph6Max) throw Error(ErrorKind::BadHeader, "invalid size byte");
    return static_cast<std::uint64_t>(c - kGraph6Offset);
  };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (byte(0) != kGraph6Max) {
    n = header_byte(0);
    pos = 1;
  } else if (s.size() > 1 && byte(1) != kGraph6Max) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | header_byte(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | header_byte(i);
    pos = 8;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) {
    throw Error(ErrorKind::TruncatedBitVector, "expected " + std::to_string(bytes) + " data bytes, found " +
                                                   std::to_string(s.size() - pos));
  }
  if (s.size() - pos > bytes) throw Error(ErrorKind::MalformedLine, "trailing bytes after graph6 data");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex row = 0;
  Vertex col = 1;
  for (std::size_t i = 0; i < bytes; ++i) {
    const int c = byte(pos + i);
    if (c < kGraph6Offset || c > kGraph6Max) throw Error(ErrorKind::MalformedLine, "invalid graph6 data byte");
    const int group = c - kGraph6Offset;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (group >> b) & 1;
      if (k >= bits) {
        if (set) throw Error(ErrorKind::MalformedLine, "non-zero padding bits");
        continue;
      }
      if (set) edges.emplace_back(row, col);
      // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kGraph6Max));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  } else {
    out.append(2, static_cast<char>(kGraph6Max));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  }
  int group = 0;
  int filled = 0;
  for (Vertex col = 1; static_cast<std::uint64_t>(col) < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kGraph6Offset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Offset));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(g.label(u));
    out += ' ';
    out += std::to_string(g.label(v));
    out += '\n';
  }
  return out;
}

}  // namespace breadthkit
