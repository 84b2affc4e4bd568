#pragma once

// Exact MSVC parameterized by vertex cover size.
//
// With a minimum vertex cover S fixed, the remaining vertices form an
// independent set split into classes of equal S-neighborhood. Some optimal
// ordering keeps every class contiguous inside a single block (the gaps
// between consecutive cover vertices), and inside a block classes appear by
// non-increasing right degree. The solver enumerates every relative order of
// S and every class-to-block assignment and keeps the cheapest realization.

#include <cstdint>
#include <optional>
#include <vector>

#include "msvc/execution.hpp"
#include "msvc/graph.hpp"

namespace msvc {

/// Smallest vertex cover if its size is at most k_max, std::nullopt otherwise.
/// Bounded search tree: branch on the first uncovered edge (take u | take v),
/// iterating the size bound upwards. Returned cover is sorted.
std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int k_max);

struct VcInstance {
  Graph graph;
  std::vector<Vertex> cover;  ///< sorted
  ClassPartition partition;   ///< over separator `cover`

  int k() const noexcept { return static_cast<int>(cover.size()); }
};

/// Throws InvalidInput if `cover` is not a vertex cover of g.
VcInstance make_vc_instance(const Graph& g, std::vector<Vertex> cover);

struct Configuration {
  std::vector<Vertex> sigma;    ///< relative order of the cover vertices
  std::vector<int> assignment;  ///< class index -> block in 1..k+1
};

/// Cover neighbors of `class_index` whose rank in sigma is >= block, i.e. the
/// right degree of the class when placed in that block.
int class_right_degree(const VcInstance& inst, std::span<const Vertex> sigma, int class_index, int block);

/// Block 1, sigma[0], block 2, ..., sigma[k-1], block k+1. Inside a block the
/// classes go by non-increasing right degree (ties: lower class index first),
/// each class contiguous in ascending id order.
Ordering realize_configuration(const VcInstance& inst, const Configuration& cfg);

inline constexpr std::uint64_t kDefaultConfigurationBudget = 100'000'000;

struct VcOptions {
  std::uint64_t configuration_budget = kDefaultConfigurationBudget;
  Execution exec = Execution::parallel;
};

struct VcResult {
  Ordering ordering;
  Cost cost = 0;
  int k = 0;
  int num_classes = 0;
  std::uint64_t configurations = 0;
};

/// Exact optimum; ties go to the lexicographically smallest position vector.
/// Throws ParameterExceeded when the minimum cover is larger than k_max and
/// BudgetExceeded when k!(k+1)^q exceeds the configuration budget.
VcResult solve_vc_fpt(const Graph& g, int k_max, const VcOptions& options = {});

/// Same search over a caller-provided instance (any vertex cover).
VcResult solve_vc_instance(const VcInstance& inst, const VcOptions& options = {});

}  // namespace msvc
