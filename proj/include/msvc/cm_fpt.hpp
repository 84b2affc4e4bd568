#pragma once

// Exact MSVC parameterized by clique modulator size.
//
// M is a clique modulator: V \ M induces a clique Q. The clique vertices are
// grouped into classes of equal M-neighborhood. For a fixed relative order
// sigma_M of M, some optimal ordering is "nice": inside every block (gap
// between consecutive modulator vertices) the clique vertices are sorted by
// non-increasing right modulator degree. What remains unknown is how many
// vertices of each class land in each block, which an integer quadratic
// program decides. The solver runs one IQP per permutation of M.
//
// Indexing: modulator slots p run over 1..k (v_p = sigma_M[p-1]) and blocks j
// over 1..k+1; block j sits between v_{j-1} and v_j. Index 0 of the per-p and
// per-block vectors below is unused.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msvc/execution.hpp"
#include "msvc/graph.hpp"
#include "msvc/iqp.hpp"

namespace msvc {

/// Minimum clique modulator of size <= k_max (a minimum vertex cover of the
/// complement), or std::nullopt.
std::optional<std::vector<Vertex>> find_clique_modulator(const Graph& g, int k_max);

/// Cost of any ordering of a clique on `clique_size` vertices:
/// sum_{i=1}^{s-1} i * (s - i).
Cost clique_base_cost(int clique_size);

struct CmInstance {
  Graph graph;
  std::vector<Vertex> modulator;  ///< sorted
  ClassPartition partition;       ///< clique vertices over separator `modulator`
  Cost base_cost = 0;             ///< clique_base_cost(n - k)

  int k() const noexcept { return static_cast<int>(modulator.size()); }
  int n() const noexcept { return graph.num_vertices(); }
};

/// Throws InvalidInput if removing `modulator` does not leave a clique.
CmInstance make_cm_instance(const Graph& g, std::vector<Vertex> modulator);

/// Modulator neighbors of the class whose rank under sigma_m is >= block.
int right_modulator_degree(const CmInstance& inst, std::span<const Vertex> sigma_m, int class_index, int block);

struct CmEncoding {
  std::vector<Vertex> sigma_m;

  std::vector<int> rm;                           ///< [p] modulator neighbors of v_p ranked after it
  std::vector<std::vector<int>> r;               ///< [i][j] right modulator degree of class i in block j
  std::vector<std::vector<int>> adjacent_classes;  ///< [p] classes adjacent to v_p (I_p)
  std::vector<std::vector<int>> block_order;     ///< [j] classes by non-increasing r, ties by index

  IqpInstance iqp;  ///< objective scaled by 2
  std::vector<std::vector<int>> x;        ///< [i][j] class-i vertices in block j
  std::vector<int> n_after;               ///< [p] clique vertices after v_p
  std::vector<int> y;                     ///< [p] position of v_p
  std::vector<int> d;                     ///< [p] right degree of v_p
  std::vector<std::vector<int>> y_first;  ///< [i][j] position of the first class-i vertex in block j

  int num_classes() const noexcept { return static_cast<int>(x.size()); }
  int k() const noexcept { return static_cast<int>(sigma_m.size()); }
  /// Classes placed before class i inside block j (J_ij).
  std::vector<int> predecessors(int class_index, int block) const;
};

/// Throws InvalidInput unless sigma_m is a permutation of the modulator.
CmEncoding build_encoding(const CmInstance& inst, std::vector<Vertex> sigma_m);

/// MSVC cost represented by a feasible point of the encoding:
/// base_cost + objective / 2.
Cost encoded_cost(const CmInstance& inst, const IqpSolution& sol);

/// Lays out the nice ordering described by a feasible point. Members of a
/// class are consumed in ascending id order.
Ordering reconstruct_ordering(const CmInstance& inst, const CmEncoding& enc, const IqpSolution& sol);

/// Keeps the modulator order and block membership of `ord`, resorting the
/// clique vertices of each block by non-increasing right modulator degree.
Ordering nice_permutation(const CmInstance& inst, const Ordering& ord);

struct CmOptions {
  IqpOptions iqp;
  Execution exec = Execution::parallel;
};

struct CmResult {
  Ordering ordering;
  Cost cost = 0;
  int k = 0;
  int num_classes = 0;
  std::vector<Vertex> sigma_m;
  std::uint64_t permutations = 0;
  std::uint64_t iqp_nodes = 0;
};

/// Exact optimum. Ties across modulator orders go to the lexicographically
/// smallest sigma_m. Throws ParameterExceeded when the minimum modulator is
/// larger than k_max; IQP budget errors propagate.
CmResult solve_cm_fpt(const Graph& g, int k_max, const CmOptions& options = {});

/// Same search with a caller-provided modulator.
CmResult solve_cm_instance(const CmInstance& inst, const CmOptions& options = {});

}  // namespace msvc
