#include "msvc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "msvc/errors.hpp"

namespace msvc {

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw InvalidInput("negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  neighbors_.resize(n_);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 0.." +
                         std::to_string(n_ - 1));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<int> positions(n, 0);
  for (int r = 0; r < n; ++r) {
    const Vertex v = sequence[r];
    if (v < 0 || v >= n) throw InvalidInput("ordering entry " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (positions[v] != 0) throw InvalidInput("vertex " + std::to_string(v) + " appears twice in ordering");
    positions[v] = r + 1;
  }
  Ordering ord;
  ord.sequence_ = std::move(sequence);
  ord.positions_ = std::move(positions);
  return ord;
}

Ordering Ordering::identity(int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

Ordering Ordering::swapped_with_next(Position p) const {
  if (p.value < 1 || p.value >= size()) throw InvalidInput("swap position " + std::to_string(p.value) + " out of range");
  Ordering out = *this;
  const int r = p.value - 1;
  std::swap(out.sequence_[r], out.sequence_[r + 1]);
  out.positions_[out.sequence_[r]] = r + 1;
  out.positions_[out.sequence_[r + 1]] = r + 2;
  return out;
}

bool lex_less_positions(const Ordering& a, const Ordering& b) {
  const auto pa = a.positions();
  const auto pb = b.positions();
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

namespace {

void require_matching(const Graph& g, const Ordering& ord) {
  if (ord.size() != g.num_vertices()) {
    throw InvalidInput("ordering has " + std::to_string(ord.size()) + " vertices, graph has " +
                       std::to_string(g.num_vertices()));
  }
}

}  // namespace

Cost evaluate_cost(const Graph& g, const Ordering& ord) {
  require_matching(g, ord);
  Cost total = 0;
  for (auto [u, v] : g.edges()) total += std::min(ord.position(u).value, ord.position(v).value);
  return total;
}

int right_degree(const Graph& g, const Ordering& ord, Vertex v) {
  require_matching(g, ord);
  if (!g.contains(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
  const int pv = ord.position(v).value;
  return static_cast<int>(std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                        [&](Vertex u) { return ord.position(u).value > pv; }));
}

Cost cost_from_right_degrees(const Graph& g, const Ordering& ord) {
  require_matching(g, ord);
  Cost total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += static_cast<Cost>(ord.position(v).value) * right_degree(g, ord, v);
  }
  return total;
}

ClassPartition partition_by_separator(const Graph& g, std::span<const Vertex> separator) {
  if (separator.size() > 64) throw InvalidInput("separator larger than 64 vertices");
  ClassPartition part;
  part.separator.assign(separator.begin(), separator.end());
  std::sort(part.separator.begin(), part.separator.end());
  std::vector<int> bit_of(g.num_vertices(), -1);
  for (std::size_t i = 0; i < part.separator.size(); ++i) {
    const Vertex s = part.separator[i];
    if (!g.contains(s)) throw InvalidInput("separator vertex " + std::to_string(s) + " not in graph");
    if (bit_of[s] != -1) throw InvalidInput("separator vertex " + std::to_string(s) + " repeated");
    bit_of[s] = static_cast<int>(i);
  }

  std::vector<std::pair<ClassPartition::Signature, Vertex>> keyed;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (bit_of[v] != -1) continue;
    ClassPartition::Signature sig = 0;
    for (Vertex u : g.neighbors(v))
      if (bit_of[u] != -1) sig |= ClassPartition::Signature{1} << bit_of[u];
    keyed.emplace_back(sig, v);
  }
  // Sorting by (signature, id) yields classes ordered by signature and then
  // smallest member, with members ascending.
  std::sort(keyed.begin(), keyed.end());

  part.class_of.assign(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      part.classes.emplace_back();
      part.signatures.push_back(keyed[i].first);
    }
    part.classes.back().push_back(keyed[i].second);
    part.class_of[keyed[i].second] = part.num_classes() - 1;
  }
  return part;
}

Ordering swap_equal_rd_nonadjacent(const Graph& g, const Ordering& ord, Position p) {
  require_matching(g, ord);
  if (p.value < 1 || p.value >= ord.size()) {
    throw PreconditionError("swap position " + std::to_string(p.value) + " has no successor");
  }
  const Vertex u = ord.at(p);
  const Vertex v = ord.at(Position{p.value + 1});
  if (g.adjacent(u, v)) throw PreconditionError("vertices at positions " + std::to_string(p.value) + ", " + std::to_string(p.value + 1) + " are adjacent");
  if (right_degree(g, ord, u) != right_degree(g, ord, v)) {
    throw PreconditionError("vertices at positions " + std::to_string(p.value) + ", " + std::to_string(p.value + 1) +
                            " have different right degrees");
  }
  return ord.swapped_with_next(p);
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  const int k = static_cast<int>(vertices.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(vertices[a], vertices[b])) edges.emplace_back(a, b);
  return Graph(k, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> mapping) {
  if (static_cast<int>(mapping.size()) != g.num_vertices()) throw InvalidInput("relabel mapping size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(mapping[u], mapping[v]);
  return Graph(g.num_vertices(), edges);
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) {
    if (!g.contains(v)) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

bool is_clique_modulator(const Graph& g, std::span<const Vertex> modulator) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : modulator) {
    if (!g.contains(v)) return false;
    in[v] = 1;
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (in[u]) continue;
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (!in[v] && !g.adjacent(u, v)) return false;
  }
  return true;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  // Raw 53-bit draws keep the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace msvc
