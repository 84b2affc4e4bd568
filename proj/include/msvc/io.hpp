#pragma once

// Edge-list graph files and solver reports.
//
// Graph file format: first significant line `n m`, then m lines `u v` with
// labels in 1..n. `#` starts a comment; blank lines are ignored.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "msvc/graph.hpp"

namespace msvc {

/// A graph plus the label each internal vertex id had in the input.
struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;  ///< labels[v] is the 1-based input label of vertex v
};

/// Throws ParseError naming the offending line.
LabeledGraph parse_graph(std::string_view text);
LabeledGraph read_graph_file(const std::filesystem::path& path);

/// Labels 1..n for a generated graph.
LabeledGraph with_default_labels(Graph g);

std::string format_graph(const LabeledGraph& lg);

struct SolveReport {
  std::string algorithm;
  std::optional<int> k;
  std::vector<int> ordering;  ///< input labels, by position
  Cost cost = 0;
  double elapsed_ms = 0.0;
  nlohmann::json stats = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Builds a report, recomputing the cost from `ord`. A mismatch with
/// `claimed_cost` throws InternalError.
SolveReport make_report(const LabeledGraph& lg, std::string algorithm, std::optional<int> k, const Ordering& ord,
                        Cost claimed_cost, nlohmann::json stats, double elapsed_ms);

nlohmann::json error_json(std::string_view kind, std::string_view message);

}  // namespace msvc
