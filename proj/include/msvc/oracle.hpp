#pragma once

// Reference solvers: exhaustive search over all orderings and the greedy
// max-residual-degree baseline.

#include <cstdint>

#include "msvc/execution.hpp"
#include "msvc/graph.hpp"

namespace msvc {

inline constexpr int kDefaultBruteForceCap = 10;

struct BruteForceResult {
  Ordering ordering;
  Cost cost = 0;
  std::uint64_t nodes = 0;  ///< search-tree nodes visited
};

/// Exact minimum over all n! orderings; ties go to the lexicographically
/// smallest position vector. Throws SizeLimitExceeded when n > limit_n.
BruteForceResult brute_force_msvc(const Graph& g, int limit_n = kDefaultBruteForceCap,
                                  Execution exec = Execution::parallel);

struct GreedyResult {
  Ordering ordering;
  Cost cost = 0;
};

/// Place a vertex of maximum residual degree (smallest id on ties) until no
/// edge is left, then append the rest in id order.
GreedyResult greedy_msvc(const Graph& g);

/// True iff some minimum-cost ordering has a non-increasing right-degree
/// sequence. Same size guard as brute_force_msvc.
bool verify_optimal_right_degree_monotone(const Graph& g, int limit_n = kDefaultBruteForceCap);

}  // namespace msvc
