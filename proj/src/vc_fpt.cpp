#include "msvc/vc_fpt.hpp"

#include <algorithm>
#include <string>

#include "incumbent.hpp"
#include "msvc/errors.hpp"

namespace msvc {

namespace {

bool cover_search(const Graph& g, std::vector<char>& in_cover, int budget, std::vector<Vertex>& chosen) {
  const auto edges = g.edges();
  const auto open = std::find_if(edges.begin(), edges.end(),
                                 [&](const Edge& e) { return !in_cover[e.first] && !in_cover[e.second]; });
  if (open == edges.end()) return true;
  if (budget == 0) return false;
  for (Vertex pick : {open->first, open->second}) {
    in_cover[pick] = 1;
    chosen.push_back(pick);
    if (cover_search(g, in_cover, budget - 1, chosen)) return true;
    chosen.pop_back();
    in_cover[pick] = 0;
  }
  return false;
}

// rank[v] in 1..k for cover vertices under sigma, 0 elsewhere.
std::vector<int> sigma_ranks(const VcInstance& inst, std::span<const Vertex> sigma) {
  std::vector<int> rank(inst.graph.num_vertices(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) rank[sigma[i]] = static_cast<int>(i) + 1;
  return rank;
}

// table[c * (k + 2) + b] = right degree of class c in block b (b in 1..k+1).
std::vector<int> right_degree_table(const VcInstance& inst, std::span<const Vertex> sigma) {
  const int k = inst.k();
  const auto rank = sigma_ranks(inst, sigma);
  std::vector<int> table(static_cast<std::size_t>(inst.partition.num_classes()) * (k + 2), 0);
  for (int c = 0; c < inst.partition.num_classes(); ++c) {
    const auto sig = inst.partition.signatures[c];
    for (int bit = 0; bit < k; ++bit) {
      if (!(sig >> bit & 1)) continue;
      const int r = rank[inst.partition.separator[bit]];
      for (int b = 1; b <= r; ++b) ++table[c * (k + 2) + b];
    }
  }
  return table;
}

std::vector<Vertex> layout(const VcInstance& inst, std::span<const Vertex> sigma, std::span<const int> assignment,
                           std::span<const int> rd_table) {
  const int k = inst.k();
  const int q = inst.partition.num_classes();
  std::vector<Vertex> seq;
  seq.reserve(inst.graph.num_vertices());
  std::vector<int> in_block;
  for (int b = 1; b <= k + 1; ++b) {
    in_block.clear();
    for (int c = 0; c < q; ++c)
      if (assignment[c] == b) in_block.push_back(c);
    std::stable_sort(in_block.begin(), in_block.end(),
                     [&](int x, int y) { return rd_table[x * (k + 2) + b] > rd_table[y * (k + 2) + b]; });
    for (int c : in_block)
      for (Vertex v : inst.partition.classes[c]) seq.push_back(v);
    if (b <= k) seq.push_back(sigma[b - 1]);
  }
  return seq;
}

void check_configuration(const VcInstance& inst, const Configuration& cfg) {
  const int k = inst.k();
  std::vector<Vertex> sorted = cfg.sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != inst.cover) throw InvalidInput("configuration sigma is not a permutation of the cover");
  if (static_cast<int>(cfg.assignment.size()) != inst.partition.num_classes()) {
    throw InvalidInput("configuration assigns " + std::to_string(cfg.assignment.size()) + " classes, instance has " +
                       std::to_string(inst.partition.num_classes()));
  }
  for (int b : cfg.assignment)
    if (b < 1 || b > k + 1) throw InvalidInput("block index " + std::to_string(b) + " outside 1.." + std::to_string(k + 1));
}

// Minimum over all assignments for one relative order of the cover.
void search_sigma(const VcInstance& inst, std::span<const Vertex> sigma, detail::Incumbent& best) {
  const int k = inst.k();
  const int q = inst.partition.num_classes();
  const auto rd_table = right_degree_table(inst, sigma);
  std::vector<int> assignment(q, 1);
  while (true) {
    Ordering ord = Ordering::from_sequence(layout(inst, sigma, assignment, rd_table));
    const Cost cost = evaluate_cost(inst.graph, ord);
    best.offer(cost, std::move(ord));
    int digit = 0;
    while (digit < q && assignment[digit] == k + 1) assignment[digit++] = 1;
    if (digit == q) break;
    ++assignment[digit];
  }
}

}  // namespace

std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int k_max) {
  std::vector<char> in_cover(g.num_vertices(), 0);
  for (int budget = 0; budget <= k_max; ++budget) {
    std::vector<Vertex> chosen;
    if (cover_search(g, in_cover, budget, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

VcInstance make_vc_instance(const Graph& g, std::vector<Vertex> cover) {
  std::sort(cover.begin(), cover.end());
  if (!is_vertex_cover(g, cover)) throw InvalidInput("given set is not a vertex cover");
  ClassPartition part = partition_by_separator(g, cover);
  return VcInstance{g, std::move(cover), std::move(part)};
}

int class_right_degree(const VcInstance& inst, std::span<const Vertex> sigma, int class_index, int block) {
  if (class_index < 0 || class_index >= inst.partition.num_classes()) throw InvalidInput("class index out of range");
  if (block < 1 || block > inst.k() + 1) throw InvalidInput("block index out of range");
  const auto rank = sigma_ranks(inst, sigma);
  const auto sig = inst.partition.signatures[class_index];
  int count = 0;
  for (int bit = 0; bit < inst.k(); ++bit)
    if ((sig >> bit & 1) && rank[inst.partition.separator[bit]] >= block) ++count;
  return count;
}

Ordering realize_configuration(const VcInstance& inst, const Configuration& cfg) {
  check_configuration(inst, cfg);
  return Ordering::from_sequence(layout(inst, cfg.sigma, cfg.assignment, right_degree_table(inst, cfg.sigma)));
}

VcResult solve_vc_instance(const VcInstance& inst, const VcOptions& options) {
  const int k = inst.k();
  const int q = inst.partition.num_classes();
  const std::uint64_t permutations = factorial(k);
  const std::uint64_t configurations =
      saturating_mul(permutations, saturating_pow(static_cast<std::uint64_t>(k) + 1, static_cast<unsigned>(q)));
  if (configurations > options.configuration_budget) {
    throw BudgetExceeded("vertex-cover search needs " +
                         (configurations == kSaturated ? std::string("more than 2^64") : std::to_string(configurations)) +
                         " configurations, budget is " + std::to_string(options.configuration_budget));
  }

  detail::Incumbent best;
  if (options.exec == Execution::serial) {
    std::vector<Vertex> sigma = inst.cover;
    do {
      search_sigma(inst, sigma, best);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    const auto count = static_cast<std::int64_t>(permutations);
#pragma omp parallel
    {
      detail::Incumbent local;
#pragma omp for schedule(dynamic, 1) nowait
      for (std::int64_t index = 0; index < count; ++index) {
        search_sigma(inst, nth_permutation(inst.cover, static_cast<std::uint64_t>(index)), local);
      }
#pragma omp critical(msvc_vc_reduce)
      best.merge(std::move(local));
    }
  }
  if (!best.found) throw InternalError("vertex-cover search produced no configuration");
  return VcResult{std::move(best.ordering), best.cost, k, q, configurations};
}

VcResult solve_vc_fpt(const Graph& g, int k_max, const VcOptions& options) {
  auto cover = min_vertex_cover(g, k_max);
  if (!cover) throw ParameterExceeded("minimum vertex cover is larger than " + std::to_string(k_max));
  return solve_vc_instance(make_vc_instance(g, std::move(*cover)), options);
}

}  // namespace msvc
