#include "msvc/cm_fpt.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <string>

#include "msvc/errors.hpp"
#include "msvc/vc_fpt.hpp"

namespace msvc {

namespace {

std::vector<int> modulator_ranks(const CmInstance& inst, std::span<const Vertex> sigma_m) {
  std::vector<int> rank(inst.n(), 0);
  for (std::size_t i = 0; i < sigma_m.size(); ++i) rank[sigma_m[i]] = static_cast<int>(i) + 1;
  return rank;
}

void check_sigma(const CmInstance& inst, std::span<const Vertex> sigma_m) {
  std::vector<Vertex> sorted(sigma_m.begin(), sigma_m.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != inst.modulator) throw InvalidInput("sigma_M is not a permutation of the modulator");
}

int modulator_degree_from(const CmInstance& inst, const std::vector<int>& rank, int class_index, int block) {
  const auto sig = inst.partition.signatures[class_index];
  int count = 0;
  for (int bit = 0; bit < inst.k(); ++bit)
    if ((sig >> bit & 1) && rank[inst.partition.separator[bit]] >= block) ++count;
  return count;
}

// Classes by non-increasing right modulator degree in each block, ties by index.
std::vector<std::vector<int>> block_orders(const std::vector<std::vector<int>>& r, int num_classes, int k) {
  std::vector<std::vector<int>> order(k + 2);
  for (int j = 1; j <= k + 1; ++j) {
    auto& classes = order[j];
    for (int i = 0; i < num_classes; ++i) classes.push_back(i);
    std::stable_sort(classes.begin(), classes.end(), [&](int a, int b) { return r[a][j] > r[b][j]; });
  }
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique_modulator(const Graph& g, int k_max) {
  return min_vertex_cover(complement(g), k_max);
}

Cost clique_base_cost(int clique_size) {
  Cost total = 0;
  for (int i = 1; i < clique_size; ++i) total += static_cast<Cost>(i) * (clique_size - i);
  return total;
}

CmInstance make_cm_instance(const Graph& g, std::vector<Vertex> modulator) {
  std::sort(modulator.begin(), modulator.end());
  if (!is_clique_modulator(g, modulator)) throw InvalidInput("given set is not a clique modulator");
  ClassPartition part = partition_by_separator(g, modulator);
  const int clique_size = g.num_vertices() - static_cast<int>(modulator.size());
  return CmInstance{g, std::move(modulator), std::move(part), clique_base_cost(clique_size)};
}

int right_modulator_degree(const CmInstance& inst, std::span<const Vertex> sigma_m, int class_index, int block) {
  check_sigma(inst, sigma_m);
  if (class_index < 0 || class_index >= inst.partition.num_classes()) throw InvalidInput("class index out of range");
  if (block < 1 || block > inst.k() + 1) throw InvalidInput("block index out of range");
  return modulator_degree_from(inst, modulator_ranks(inst, sigma_m), class_index, block);
}

std::vector<int> CmEncoding::predecessors(int class_index, int block) const {
  const auto& order = block_order[block];
  const auto at = std::find(order.begin(), order.end(), class_index);
  return {order.begin(), at};
}

CmEncoding build_encoding(const CmInstance& inst, std::vector<Vertex> sigma_m) {
  check_sigma(inst, sigma_m);
  const int k = inst.k();
  const int n = inst.n();
  const int classes = inst.partition.num_classes();
  const auto rank = modulator_ranks(inst, sigma_m);

  CmEncoding enc;
  enc.sigma_m = std::move(sigma_m);
  enc.rm.assign(k + 1, 0);
  enc.adjacent_classes.assign(k + 1, {});
  for (int p = 1; p <= k; ++p) {
    const Vertex vp = enc.sigma_m[p - 1];
    for (Vertex u : inst.graph.neighbors(vp))
      if (rank[u] > p) ++enc.rm[p];
    for (int i = 0; i < classes; ++i)
      if (inst.graph.adjacent(vp, inst.partition.classes[i].front())) enc.adjacent_classes[p].push_back(i);
  }
  enc.r.assign(classes, std::vector<int>(k + 2, 0));
  for (int i = 0; i < classes; ++i)
    for (int j = 1; j <= k + 1; ++j) enc.r[i][j] = modulator_degree_from(inst, rank, i, j);
  enc.block_order = block_orders(enc.r, classes, k);

  // x variables first, largest class first, so branching fixes the most
  // influential counts early; every other variable follows by propagation.
  std::vector<int> by_size(classes);
  for (int i = 0; i < classes; ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    return inst.partition.classes[a].size() > inst.partition.classes[b].size();
  });

  auto& iqp = enc.iqp;
  enc.x.assign(classes, std::vector<int>(k + 2, -1));
  for (int i : by_size) {
    const auto size = static_cast<IqpInt>(inst.partition.classes[i].size());
    for (int j = 1; j <= k + 1; ++j) enc.x[i][j] = iqp.add_variable(0, size);
  }
  enc.n_after.assign(k + 1, -1);
  enc.y.assign(k + 1, -1);
  enc.d.assign(k + 1, -1);
  for (int p = 1; p <= k; ++p) enc.n_after[p] = iqp.add_variable(0, n - k);
  for (int p = 1; p <= k; ++p) enc.y[p] = iqp.add_variable(1, n);
  for (int p = 1; p <= k; ++p) enc.d[p] = iqp.add_variable(0, n);
  enc.y_first.assign(classes, std::vector<int>(k + 2, -1));
  for (int i = 0; i < classes; ++i)
    for (int j = 1; j <= k + 1; ++j) enc.y_first[i][j] = iqp.add_variable(1, n + 1);

  // Objective (x2): 2 d_p y_p + (n_p^2 - n_p) + r_ij (2 x_ij y_ij + x_ij^2 - x_ij).
  for (int p = 1; p <= k; ++p) {
    iqp.add_quadratic(enc.d[p], enc.y[p], 1);
    iqp.add_quadratic(enc.y[p], enc.d[p], 1);
    iqp.add_quadratic(enc.n_after[p], enc.n_after[p], 1);
    iqp.add_linear(enc.n_after[p], -1);
  }
  for (int i = 0; i < classes; ++i) {
    for (int j = 1; j <= k + 1; ++j) {
      const IqpInt rij = enc.r[i][j];
      if (rij == 0) continue;
      iqp.add_quadratic(enc.x[i][j], enc.y_first[i][j], rij);
      iqp.add_quadratic(enc.y_first[i][j], enc.x[i][j], rij);
      iqp.add_quadratic(enc.x[i][j], enc.x[i][j], rij);
      iqp.add_linear(enc.x[i][j], -rij);
    }
  }

  // n_p = sum_{j > p} sum_i x_ij
  for (int p = 1; p <= k; ++p) {
    std::vector<LinearTerm> row{{enc.n_after[p], 1}};
    for (int j = p + 1; j <= k + 1; ++j)
      for (int i = 0; i < classes; ++i) row.push_back({enc.x[i][j], -1});
    iqp.add_equality(std::move(row), 0);
  }
  // |A_i| = sum_j x_ij
  for (int i = 0; i < classes; ++i) {
    std::vector<LinearTerm> row;
    for (int j = 1; j <= k + 1; ++j) row.push_back({enc.x[i][j], 1});
    iqp.add_equality(std::move(row), static_cast<IqpInt>(inst.partition.classes[i].size()));
  }
  // y_p = n - (n_p + k - p)
  for (int p = 1; p <= k; ++p) iqp.add_equality({{enc.y[p], 1}, {enc.n_after[p], 1}}, n - k + p);
  // d_p = rm_p + sum_{j > p} sum_{i in I_p} x_ij
  for (int p = 1; p <= k; ++p) {
    std::vector<LinearTerm> row{{enc.d[p], 1}};
    for (int j = p + 1; j <= k + 1; ++j)
      for (int i : enc.adjacent_classes[p]) row.push_back({enc.x[i][j], -1});
    iqp.add_equality(std::move(row), enc.rm[p]);
  }
  // y_ij = y_{j-1} + 1 + sum_{q in J_ij} x_qj, with y_0 = 0. Block j opens one
  // slot after v_{j-1}.
  for (int j = 1; j <= k + 1; ++j) {
    const auto& order = enc.block_order[j];
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      const int i = order[slot];
      std::vector<LinearTerm> row{{enc.y_first[i][j], 1}};
      if (j > 1) row.push_back({enc.y[j - 1], -1});
      for (std::size_t before = 0; before < slot; ++before) row.push_back({enc.x[order[before]][j], -1});
      iqp.add_equality(std::move(row), 1);
    }
  }
  return enc;
}

Cost encoded_cost(const CmInstance& inst, const IqpSolution& sol) {
  if (sol.objective % 2 != 0) throw InternalError("doubled IQP objective is odd");
  return inst.base_cost + sol.objective / 2;
}

Ordering reconstruct_ordering(const CmInstance& inst, const CmEncoding& enc, const IqpSolution& sol) {
  const int k = enc.k();
  const int classes = enc.num_classes();
  if (static_cast<int>(sol.values.size()) != enc.iqp.num_vars()) throw InvalidInput("IQP solution has wrong dimension");
  for (int i = 0; i < classes; ++i) {
    IqpInt placed = 0;
    for (int j = 1; j <= k + 1; ++j) placed += sol.values[enc.x[i][j]];
    if (placed != static_cast<IqpInt>(inst.partition.classes[i].size())) {
      throw InternalError("class " + std::to_string(i) + " is not fully placed by the IQP solution");
    }
  }
  std::vector<std::size_t> cursor(classes, 0);
  std::vector<Vertex> seq;
  seq.reserve(inst.n());
  for (int j = 1; j <= k + 1; ++j) {
    for (int i : enc.block_order[j]) {
      const auto& members = inst.partition.classes[i];
      for (IqpInt c = 0; c < sol.values[enc.x[i][j]]; ++c) seq.push_back(members[cursor[i]++]);
    }
    if (j <= k) seq.push_back(enc.sigma_m[j - 1]);
  }
  return Ordering::from_sequence(std::move(seq));
}

Ordering nice_permutation(const CmInstance& inst, const Ordering& ord) {
  if (ord.size() != inst.n()) throw InvalidInput("ordering does not match instance");
  const int k = inst.k();
  const auto& class_of = inst.partition.class_of;
  std::vector<Vertex> sigma_m;
  for (Vertex v : ord.sequence())
    if (class_of[v] == -1) sigma_m.push_back(v);
  const auto rank = modulator_ranks(inst, sigma_m);

  std::vector<Vertex> seq;
  seq.reserve(inst.n());
  std::vector<Vertex> block;
  int j = 1;
  auto flush = [&] {
    std::stable_sort(block.begin(), block.end(), [&](Vertex a, Vertex b) {
      const int ra = modulator_degree_from(inst, rank, class_of[a], j);
      const int rb = modulator_degree_from(inst, rank, class_of[b], j);
      return ra != rb ? ra > rb : class_of[a] < class_of[b];
    });
    seq.insert(seq.end(), block.begin(), block.end());
    block.clear();
  };
  for (Vertex v : ord.sequence()) {
    if (class_of[v] == -1) {
      flush();
      seq.push_back(v);
      ++j;
    } else {
      block.push_back(v);
    }
  }
  flush();
  if (j != k + 1) throw InternalError("block count mismatch in nice_permutation");
  return Ordering::from_sequence(std::move(seq));
}

namespace {

struct PermutationOutcome {
  bool found = false;
  Cost cost = std::numeric_limits<Cost>::max();
  std::uint64_t index = 0;
  Ordering ordering;
  std::vector<Vertex> sigma_m;

  bool better_than(const PermutationOutcome& other) const {
    if (!other.found) return found;
    return found && (cost < other.cost || (cost == other.cost && index < other.index));
  }
};

PermutationOutcome solve_for_sigma(const CmInstance& inst, std::uint64_t index, const IqpOptions& iqp_options,
                                   std::uint64_t& nodes) {
  CmEncoding enc = build_encoding(inst, nth_permutation(inst.modulator, index));
  IqpResult result = solve_iqp(enc.iqp, iqp_options);
  nodes += result.nodes;
  PermutationOutcome out;
  if (!result.feasible()) return out;
  out.found = true;
  out.cost = encoded_cost(inst, *result.solution);
  out.index = index;
  out.ordering = reconstruct_ordering(inst, enc, *result.solution);
  out.sigma_m = enc.sigma_m;
  return out;
}

}  // namespace

CmResult solve_cm_instance(const CmInstance& inst, const CmOptions& options) {
  const std::uint64_t permutations = factorial(inst.k());
  PermutationOutcome best;
  std::uint64_t nodes = 0;

  if (options.exec == Execution::serial) {
    for (std::uint64_t index = 0; index < permutations; ++index) {
      auto outcome = solve_for_sigma(inst, index, options.iqp, nodes);
      if (outcome.better_than(best)) best = std::move(outcome);
    }
  } else {
    const auto count = static_cast<std::int64_t>(permutations);
    // Exceptions may not cross the OpenMP region boundary.
    std::exception_ptr failure;
#pragma omp parallel
    {
      PermutationOutcome local;
      std::uint64_t local_nodes = 0;
#pragma omp for schedule(dynamic, 1) nowait
      for (std::int64_t index = 0; index < count; ++index) {
        try {
          auto outcome = solve_for_sigma(inst, static_cast<std::uint64_t>(index), options.iqp, local_nodes);
          if (outcome.better_than(local)) local = std::move(outcome);
        } catch (...) {
#pragma omp critical(msvc_cm_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(msvc_cm_reduce)
      {
        nodes += local_nodes;
        if (local.better_than(best)) best = std::move(local);
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (!best.found) throw InternalError("no modulator order produced a feasible IQP");
  const Cost check = evaluate_cost(inst.graph, best.ordering);
  if (check != best.cost) {
    throw InternalError("reconstructed ordering costs " + std::to_string(check) + ", IQP predicted " +
                        std::to_string(best.cost));
  }
  return CmResult{std::move(best.ordering), best.cost, inst.k(), inst.partition.num_classes(),
                  std::move(best.sigma_m), permutations, nodes};
}

CmResult solve_cm_fpt(const Graph& g, int k_max, const CmOptions& options) {
  auto modulator = find_clique_modulator(g, k_max);
  if (!modulator) throw ParameterExceeded("minimum clique modulator is larger than " + std::to_string(k_max));
  return solve_cm_instance(make_cm_instance(g, std::move(*modulator)), options);
}

}  // namespace msvc
