#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "breadthkit/atfree.hpp"
#include "breadthkit/constructor.hpp"
#include "breadthkit/decomposition.hpp"
#include "breadthkit/document.hpp"
#include "breadthkit/enumerate.hpp"
#include "breadthkit/error.hpp"
#include "breadthkit/generators.hpp"
#include "breadthkit/graph_io.hpp"
#include "breadthkit/mesp.hpp"
#include "breadthkit/oracle.hpp"

namespace breadthkit::cli {

namespace {

// Exact strong-breadth measurement needs all-pairs distances; above this
// size the summary reports the construction radius as an upper bound.
constexpr std::size_t kMeasureLimit = 4096;

struct InputOptions {
  std::string path;
  std::string format;  // empty: by extension
  std::size_t index = 0;
};

struct OutputOptions {
  std::string path;  // empty: primary stream
};

void add_input(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("graph", in.path, "Graph file (edge list, or graph6 for .g6/.graph6)")->required();
  cmd.add_option("--format", in.format, "Input format override")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
  cmd.add_option("--index", in.index, "Line of a multi-graph graph6 file (0-based)");
}

bool is_graph6(const InputOptions& in) {
  if (!in.format.empty()) return in.format == "graph6";
  auto ends_with = [&](std::string_view suffix) { return std::string_view(in.path).ends_with(suffix); };
  return ends_with(".g6") || ends_with(".graph6");
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::MalformedLine, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<Graph> load_graphs(const std::string& path, bool graph6) {
  std::istringstream in(slurp(path));
  if (graph6) return read_graph6(in);
  return {parse_edge_list(in)};
}

Graph load_graph(const InputOptions& opts) {
  std::vector<Graph> graphs = load_graphs(opts.path, is_graph6(opts));
  if (opts.index >= graphs.size()) {
    throw Error(ErrorKind::MalformedLine, "graph index " + std::to_string(opts.index) + " out of range");
  }
  return std::move(graphs[opts.index]);
}

class Sink {
 public:
  Sink(const OutputOptions& opts, std::ostream& fallback) {
    if (!opts.path.empty()) {
      file_ = std::make_unique<std::ofstream>(opts.path);
      if (!*file_) throw Error(ErrorKind::MalformedLine, "cannot write " + opts.path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Vertex dense_vertex(const Graph& g, std::int64_t label) {
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v) {
    if (g.label(v) == label) return v;
  }
  throw Error(ErrorKind::PathNotInGraph, "unknown vertex label " + std::to_string(label));
}

Path parse_path_flag(const Graph& g, const std::string& text) {
  Path path;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::int64_t label = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::MalformedLine, "bad vertex in --path: '" + token + "'");
    }
    path.vertices.push_back(dense_vertex(g, label));
  }
  return path;
}

std::string measured_strong_breadth(const Graph& g, const PathDecomposition& phi, int construction_radius) {
  if (g.n() > kMeasureLimit) return "<=" + std::to_string(construction_radius);
  auto sb = strong_breadth(g, phi);
  return sb ? std::to_string(*sb) : "none";
}

void write_summary(std::ostream& err, const Graph& g, const CenteredDecomposition& r) {
  err << "lambda=" << r.lambda << " radius=" << r.radius << " bags=" << r.decomposition.size()
      << " strong_breadth=" << measured_strong_breadth(g, r.decomposition, r.radius) << '\n';
}

std::string describe_with_labels(const Graph& g, const ViolationReport& v) {
  std::ostringstream out;
  out << to_string(v.kind);
  switch (v.kind) {
    case ViolationKind::UncoveredVertex:
      out << " vertex=" << g.label(v.vertex);
      break;
    case ViolationKind::UncoveredEdge:
      out << " edge=" << g.label(v.edge.first) << "," << g.label(v.edge.second);
      break;
    case ViolationKind::NonConsecutive:
      out << " vertex=" << g.label(v.vertex) << " bags=" << v.bags[0] << "," << v.bags[2] << " missing=" << v.bags[1];
      break;
  }
  return out.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::NotAShortestPath:
    case ErrorKind::PathNotInGraph:
    case ErrorKind::NotATFree:
    case ErrorKind::NoDominatingPair:
      return kPreconditionFailed;
    case ErrorKind::InvalidDecomposition:
      return kInvalidDecomposition;
    default:
      return kInputError;
  }
}

// ---- subcommands -----------------------------------------------------------

struct DecomposeOptions {
  InputOptions input;
  OutputOptions output;
  std::string finder = "all-pairs";
  std::string path;
};

int cmd_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(opts.input);
  CenteredDecomposition result;
  if (!opts.path.empty()) {
    const Path path = parse_path_flag(g, opts.path);
    if (!is_shortest_path(g, path)) {
      err << "error: --path is not a shortest path of the graph\n";
      return kPreconditionFailed;
    }
    result = construct_phi(g, path);
  } else {
    result = approximate_spb(g, make_finder(*parse_finder(opts.finder))).result;
  }
  Sink sink(opts.output, out);
  *sink << serialize(make_document(g, result)) << '\n';
  write_summary(err, g, result);
  return kSuccess;
}

struct ValidateOptions {
  InputOptions input;
  std::string document;
};

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream&) {
  const Graph g = load_graph(opts.input);
  const PathDecomposition phi = to_decomposition(g, parse_document(slurp(opts.document)));
  if (auto violation = validate(g, phi)) {
    out << "Invalid " << describe_with_labels(g, *violation) << '\n';
    return kInvalidDecomposition;
  }
  out << "Valid bags=" << phi.size() << " width=" << width(phi);
  if (g.n() <= kMeasureLimit) {
    const DistanceMatrix dist = all_pairs_distances(g);
    auto sb = strong_breadth(g, dist, phi);
    out << " breadth=" << breadth(g, dist, phi) << " strong_breadth=" << (sb ? std::to_string(*sb) : "none");
  }
  out << '\n';
  return kSuccess;
}

struct OracleOptions {
  std::string which;
  InputOptions input;
  OutputOptions output;
  std::size_t cap = 0;
};

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(opts.input);
  const bool pb = opts.which == "pb";
  const OracleResult r = pb ? exact_pathbreadth(g, opts.cap ? opts.cap : 8) : exact_strong_pathbreadth(g, opts.cap ? opts.cap : 7);
  DecompositionDocument doc = make_document(g, r.witness);
  if (!pb) {
    std::vector<std::int64_t> centers;
    for (Vertex c : r.centers) centers.push_back(g.label(c));
    doc.centers = std::move(centers);
    doc.radius = r.value;
  }
  doc.parameter = r.value;
  Sink sink(opts.output, out);
  *sink << serialize(doc) << '\n';
  err << opts.which << "=" << r.value << " bags=" << r.witness.size() << '\n';
  return kSuccess;
}

struct AtFreeOptions {
  InputOptions input;
  OutputOptions output;
};

int cmd_atfree(const AtFreeOptions& opts, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(opts.input);
  try {
    const AtFreeDecomposition r = atfree_strong_breadth2(g);
    Sink sink(opts.output, out);
    *sink << serialize(make_document(g, r.result)) << '\n';
    err << "pair=" << g.label(r.pair.x) << "," << g.label(r.pair.y) << ' ';
    write_summary(err, g, r.result);
    return kSuccess;
  } catch (const NotAtFreeError& e) {
    const auto& t = e.witness();
    err << "NotATFree witness=" << g.label(t.a) << "," << g.label(t.b) << "," << g.label(t.c) << '\n';
    return kPreconditionFailed;
  }
}

struct SweepOptions {
  std::size_t n = 0;
  std::string corpus;
  bool force = false;
};

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<Graph> graphs;
  if (!opts.corpus.empty()) {
    graphs = load_graphs(opts.corpus, true);
  } else {
    if (opts.n == 0) {
      err << "error: sweep needs --n or --corpus\n";
      return kInputError;
    }
    if (opts.n > 7 && !opts.force) {
      err << "error: --n above 7 needs --force\n";
      return kPreconditionFailed;
    }
    graphs = enumerate_connected_graphs(opts.n);
  }
  const std::vector<Theorem1Report> reports = sweep_theorem1(graphs);

  out << "id\tgraph6\tn\tm\tpb\tspb\tratio\tholds\n";
  double max_ratio = 0.0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& r = reports[i];
    out << i << '\t' << to_graph6(graphs[i]) << '\t' << graphs[i].n() << '\t' << graphs[i].m() << '\t' << r.pb << '\t'
        << r.spb << '\t';
    if (r.pb > 0) {
      const double ratio = static_cast<double>(r.spb) / r.pb;
      max_ratio = std::max(max_ratio, ratio);
      out << std::fixed << std::setprecision(2) << ratio;
    } else {
      out << "n/a";
    }
    out << '\t' << (r.holds ? "yes" : "NO") << '\n';
    if (!r.holds) ++failures;
  }
  if (failures > 0) {
    out << "COUNTEREXAMPLES " << failures << " of " << graphs.size() << '\n';
    return kCounterexample;
  }
  out << "ALL-HOLD graphs=" << graphs.size() << " max_ratio=" << std::fixed << std::setprecision(2) << max_ratio << '\n';
  return kSuccess;
}

struct BenchOptions {
  std::string family;
  std::vector<std::size_t> sizes;
  double spread_limit = 5.0;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(opts.family);
  if (!family) {
    err << "error: unknown family '" << opts.family << "'\n";
    return kInputError;
  }
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  out << "n\tm\tlength\tlambda\tbags\tsettled\tscans\twork\twork/(n+m)\twithin_3n+2m\tserial_ms\tomp_ms\tvalid\n";
  double lo = 0.0;
  double hi = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < opts.sizes.size(); ++i) {
    const FamilyInstance inst = make_family_instance(*family, opts.sizes[i]);
    const Graph& g = inst.graph;

    auto start = Clock::now();
    const CenteredDecomposition serial = construct_phi_serial(g, inst.path);
    const double serial_ms = ms_since(start);
    start = Clock::now();
    const CenteredDecomposition parallel = construct_phi(g, inst.path);
    const double omp_ms = ms_since(start);

    const bool agree = serial.work == parallel.work && serial.centers == parallel.centers;
    const bool valid = agree && !validate(g, serial.decomposition).has_value();
    const bool bounded = serial.work.within_linear_bound(g.n(), g.m());
    const double ratio = serial.work.total() / static_cast<double>(g.n() + g.m());
    lo = i == 0 ? ratio : std::min(lo, ratio);
    hi = i == 0 ? ratio : std::max(hi, ratio);
    ok = ok && valid && bounded;

    out << g.n() << '\t' << g.m() << '\t' << inst.path.length() << '\t' << serial.lambda << '\t'
        << serial.decomposition.size() << '\t' << serial.work.vertices_settled << '\t' << serial.work.adjacency_scans
        << '\t' << std::fixed << std::setprecision(1) << serial.work.total() << '\t' << std::setprecision(3) << ratio
        << '\t' << (bounded ? "yes" : "NO") << '\t' << std::setprecision(2) << serial_ms << '\t' << omp_ms << '\t'
        << (valid ? "yes" : "NO") << '\n';
  }
  const double spread = lo > 0 ? hi / lo : 0.0;
  const bool linear = spread <= opts.spread_limit;
  out << "linearity: min=" << std::setprecision(3) << lo << " max=" << hi << " spread=" << spread << " (limit "
      << opts.spread_limit << ") " << (linear ? "OK" : "FAIL") << '\n';
  return ok && linear ? kSuccess : kInvalidDecomposition;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path decompositions of bounded strong breadth"};
  app.require_subcommand(1);

  DecomposeOptions decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Ball-cover decomposition along a shortest path");
  add_input(*decompose_cmd, decompose.input);
  decompose_cmd->add_option("-o,--output", decompose.output.path, "Write the document here");
  auto* finder_opt = decompose_cmd->add_option("--finder", decompose.finder, "Path finder")
                         ->check(CLI::IsMember({"exact-small", "all-pairs"}));
  decompose_cmd->add_option("--path", decompose.path, "Comma-separated shortest path to use")->excludes(finder_opt);

  ValidateOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Check a decomposition document against a graph");
  add_input(*validate_cmd, validate_opts.input);
  validate_cmd->add_option("-d,--decomposition", validate_opts.document, "Decomposition JSON")->required();

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact pathbreadth or strong pathbreadth");
  oracle_cmd->add_option("parameter", oracle.which, "pb or spb")->required()->check(CLI::IsMember({"pb", "spb"}));
  add_input(*oracle_cmd, oracle.input);
  oracle_cmd->add_option("-o,--output", oracle.output.path, "Write the document here");
  oracle_cmd->add_option("--cap", oracle.cap, "Vertex cap (default 8 for pb, 7 for spb)");

  AtFreeOptions atfree;
  auto* atfree_cmd = app.add_subcommand("atfree", "Strong-breadth-2 decomposition of an AT-free graph");
  add_input(*atfree_cmd, atfree.input);
  atfree_cmd->add_option("-o,--output", atfree.output.path, "Write the document here");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check pb <= spb <= 4 pb over a corpus");
  auto* n_opt = sweep_cmd->add_option("--n", sweep.n, "All connected graphs on n vertices");
  sweep_cmd->add_option("--corpus", sweep.corpus, "graph6 corpus file")->excludes(n_opt);
  sweep_cmd->add_flag("--force", sweep.force, "Allow n above 7");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time and count the ball-cover construction");
  bench_cmd->add_option("--family", bench.family, "cycle, caterpillar or grid")->required();
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")->required()->delimiter(',');
  bench_cmd->add_option("--spread-limit", bench.spread_limit, "Allowed max/min of work/(n+m)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(decompose, out, err);
    if (*validate_cmd) return cmd_validate(validate_opts, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, out, err);
    if (*atfree_cmd) return cmd_atfree(atfree, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace breadthkit::cli
