#include "msvc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "incumbent.hpp"
#include "msvc/errors.hpp"

namespace msvc {

namespace {

void check_size(const Graph& g, int limit_n) {
  if (g.num_vertices() > limit_n) {
    throw SizeLimitExceeded("exhaustive search refused: n = " + std::to_string(g.num_vertices()) +
                            " exceeds cap " + std::to_string(limit_n));
  }
}

// Incremental state of a partial ordering (prefix of ranks 1..placed).
class PrefixState {
 public:
  explicit PrefixState(const Graph& g) : g_(g), residual_(g.num_vertices()), placed_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) residual_[v] = g.degree(v);
    remaining_edges_ = g.num_edges();
    sequence_.reserve(g.num_vertices());
  }

  int size() const { return g_.num_vertices(); }
  int placed_count() const { return static_cast<int>(sequence_.size()); }
  bool is_placed(Vertex v) const { return placed_[v] != 0; }
  int residual(Vertex v) const { return residual_[v]; }
  int remaining_edges() const { return remaining_edges_; }
  Cost partial_cost() const { return partial_; }
  const std::vector<Vertex>& sequence() const { return sequence_; }

  void push(Vertex v) {
    partial_ += static_cast<Cost>(placed_count() + 1) * residual_[v];
    remaining_edges_ -= residual_[v];
    placed_[v] = 1;
    for (Vertex u : g_.neighbors(v))
      if (!placed_[u]) --residual_[u];
    sequence_.push_back(v);
  }

  void pop() {
    const Vertex v = sequence_.back();
    sequence_.pop_back();
    for (Vertex u : g_.neighbors(v))
      if (!placed_[u]) ++residual_[u];
    placed_[v] = 0;
    remaining_edges_ += residual_[v];
    partial_ -= static_cast<Cost>(placed_count() + 1) * residual_[v];
  }

  // Admissible bound on the final cost: rank r+i can cover at most the i-th
  // largest current residual degree.
  Cost lower_bound() {
    scratch_.clear();
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (!placed_[v] && residual_[v] > 0) scratch_.push_back(residual_[v]);
    std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
    Cost bound = partial_;
    int left = remaining_edges_;
    int rank = placed_count();
    for (int d : scratch_) {
      if (left <= 0) break;
      const int covered = std::min(d, left);
      bound += static_cast<Cost>(++rank) * covered;
      left -= covered;
    }
    return bound;
  }

  // Once every edge is covered the cost is fixed; the id-ordered completion
  // has the smallest position vector among all completions.
  std::vector<Vertex> completed() const {
    std::vector<Vertex> seq = sequence_;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (!placed_[v]) seq.push_back(v);
    return seq;
  }

 private:
  const Graph& g_;
  std::vector<int> residual_;
  std::vector<char> placed_;
  std::vector<Vertex> sequence_;
  std::vector<int> scratch_;
  int remaining_edges_ = 0;
  Cost partial_ = 0;
};

using detail::Incumbent;

// Depth-first search below the current prefix. `bound` only prunes strictly
// worse branches, so equal-cost ties are all seen.
void search(PrefixState& state, Incumbent& best, Cost bound, std::uint64_t& nodes) {
  ++nodes;
  if (state.remaining_edges() == 0) {
    best.offer(state.partial_cost(), Ordering::from_sequence(state.completed()));
    return;
  }
  const Cost limit = best.found ? std::min(bound, best.cost) : bound;
  if (state.lower_bound() > limit) return;
  for (Vertex v = 0; v < state.size(); ++v) {
    if (state.is_placed(v)) continue;
    state.push(v);
    search(state, best, bound, nodes);
    state.pop();
  }
}

}  // namespace

BruteForceResult brute_force_msvc(const Graph& g, int limit_n, Execution exec) {
  check_size(g, limit_n);
  const int n = g.num_vertices();
  if (n == 0) return {Ordering::identity(0), 0, 1};

  // Greedy is feasible, so its cost bounds the optimum from above.
  const Cost upper = greedy_msvc(g).cost;
  Incumbent best;
  std::uint64_t nodes = 1;

  if (exec == Execution::serial) {
    PrefixState state(g);
    for (Vertex first = 0; first < n; ++first) {
      state.push(first);
      search(state, best, upper, nodes);
      state.pop();
    }
  } else {
    std::vector<Incumbent> per_branch(n);
    std::vector<std::uint64_t> per_nodes(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (Vertex first = 0; first < n; ++first) {
      PrefixState state(g);
      state.push(first);
      search(state, per_branch[first], upper, per_nodes[first]);
    }
    for (Vertex first = 0; first < n; ++first) {
      best.merge(std::move(per_branch[first]));
      nodes += per_nodes[first];
    }
  }
  if (!best.found) throw InternalError("brute force found no ordering within the greedy bound");
  return {std::move(best.ordering), best.cost, nodes};
}

GreedyResult greedy_msvc(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> residual(n);
  std::vector<char> placed(n, 0);
  for (Vertex v = 0; v < n; ++v) residual[v] = g.degree(v);
  int remaining = g.num_edges();
  std::vector<Vertex> seq;
  seq.reserve(n);
  while (remaining > 0) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!placed[v] && (pick == -1 || residual[v] > residual[pick])) pick = v;
    placed[pick] = 1;
    remaining -= residual[pick];
    for (Vertex u : g.neighbors(pick))
      if (!placed[u]) --residual[u];
    seq.push_back(pick);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!placed[v]) seq.push_back(v);
  Ordering ord = Ordering::from_sequence(std::move(seq));
  const Cost cost = evaluate_cost(g, ord);
  return {std::move(ord), cost};
}

bool verify_optimal_right_degree_monotone(const Graph& g, int limit_n) {
  check_size(g, limit_n);
  const Cost optimum = brute_force_msvc(g, limit_n, Execution::serial).cost;
  PrefixState state(g);

  // A vertex's right degree is its residual degree at the moment it is placed,
  // so the monotone constraint can be enforced while descending.
  std::function<bool(int)> descend = [&](int previous_rd) -> bool {
    if (state.remaining_edges() == 0) return state.partial_cost() == optimum;
    if (state.lower_bound() > optimum) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (state.is_placed(v) || state.residual(v) > previous_rd) continue;
      const int rd = state.residual(v);
      state.push(v);
      const bool ok = descend(rd);
      state.pop();
      if (ok) return true;
    }
    return false;
  };
  return descend(std::numeric_limits<int>::max());
}

}  // namespace msvc
