#include "msvc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "msvc/errors.hpp"

namespace msvc {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::optional<int> n;
  long long declared_edges = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    last_line = line_no;
    if (tokens.size() != 2) {
      throw ParseError(line_no, n ? "edge line must be 'u v'" : "header must be 'n m'");
    }
    const long long a = to_integer(tokens[0], line_no);
    const long long b = to_integer(tokens[1], line_no);
    if (!n) {
      if (a < 0 || b < 0) throw ParseError(line_no, "vertex and edge counts must be non-negative");
      if (a > 1'000'000) throw ParseError(line_no, "vertex count too large");
      n = static_cast<int>(a);
      declared_edges = b;
      continue;
    }
    if (a < 1 || a > *n || b < 1 || b > *n) {
      throw ParseError(line_no, "vertex label outside 1.." + std::to_string(*n));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    edge_line.push_back(line_no);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");

  // Duplicate detection by line so the message can point at the second copy.
  std::vector<std::vector<char>> seen(*n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u > v) std::swap(u, v);
    auto& row = seen[u];
    if (row.empty()) row.assign(*n, 0);
    if (row[v]) throw ParseError(edge_line[e], "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    row[v] = 1;
  }
  if (static_cast<long long>(edges.size()) != declared_edges) {
    throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                    std::to_string(edges.size()));
  }

  LabeledGraph lg;
  lg.graph = Graph(*n, edges);
  lg.labels.resize(*n);
  for (int v = 0; v < *n; ++v) lg.labels[v] = v + 1;
  return lg;
}

LabeledGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

LabeledGraph with_default_labels(Graph g) {
  LabeledGraph lg{std::move(g), {}};
  lg.labels.resize(lg.graph.num_vertices());
  for (int v = 0; v < lg.graph.num_vertices(); ++v) lg.labels[v] = v + 1;
  return lg;
}

std::string format_graph(const LabeledGraph& lg) {
  std::ostringstream out;
  out << lg.graph.num_vertices() << ' ' << lg.graph.num_edges() << '\n';
  for (auto [u, v] : lg.graph.edges()) out << lg.labels[u] << ' ' << lg.labels[v] << '\n';
  return out.str();
}

nlohmann::json SolveReport::to_json() const {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
  j["cost"] = cost;
  j["ordering"] = ordering;
  j["stats"] = stats;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

SolveReport make_report(const LabeledGraph& lg, std::string algorithm, std::optional<int> k, const Ordering& ord,
                        Cost claimed_cost, nlohmann::json stats, double elapsed_ms) {
  const Cost recomputed = evaluate_cost(lg.graph, ord);
  if (recomputed != claimed_cost) {
    throw InternalError(algorithm + " reported cost " + std::to_string(claimed_cost) + " but its ordering costs " +
                        std::to_string(recomputed));
  }
  SolveReport report;
  report.algorithm = std::move(algorithm);
  report.k = k;
  report.cost = recomputed;
  report.elapsed_ms = elapsed_ms;
  report.stats = std::move(stats);
  for (Vertex v : ord.sequence()) report.ordering.push_back(lg.labels[v]);
  return report;
}

nlohmann::json error_json(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

}  // namespace msvc
