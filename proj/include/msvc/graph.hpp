#pragma once

// Graph representation, vertex orderings and the MSVC cost function.
//
// Vertices are 0-based ids. Positions in an ordering are 1-based ranks and
// carried by their own type so the two are never mixed silently.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace msvc {

using Vertex = int;
using Cost = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// 1-based rank of a vertex in an ordering.
struct Position {
  int value = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Simple undirected graph with O(1) adjacency queries.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, duplicate edges or ids outside 0..n-1.
  Graph(int num_vertices, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph empty(int n);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Neighbors in ascending id order.
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return neighbors_[v]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(neighbors_[v].size()); }

  /// Edges as (u, v) with u < v, sorted.
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> matrix_;
};

/// Bijection between vertices and positions 1..n.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[r]` is the vertex placed at rank r+1. Throws InvalidInput unless
  /// the sequence is a permutation of 0..size-1.
  static Ordering from_sequence(std::vector<Vertex> sequence);
  static Ordering identity(int n);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  Position position(Vertex v) const noexcept { return Position{positions_[v]}; }
  Vertex at(Position p) const noexcept { return sequence_[p.value - 1]; }

  std::span<const Vertex> sequence() const noexcept { return sequence_; }
  /// positions()[v] is the 1-based rank of v.
  std::span<const int> positions() const noexcept { return positions_; }

  /// The ordering with the vertices at ranks p and p+1 exchanged.
  Ordering swapped_with_next(Position p) const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> positions_;
};

/// Lexicographic comparison of position vectors, the tie-break rule shared by
/// every exact solver.
bool lex_less_positions(const Ordering& a, const Ordering& b);

/// Equivalence classes of V \ S under "same neighborhood inside S".
struct ClassPartition {
  using Signature = std::uint64_t;

  /// Sorted ascending. Bit i of a signature refers to separator[i].
  std::vector<Vertex> separator;
  /// Members in ascending id order; classes sorted by (signature, smallest member).
  std::vector<std::vector<Vertex>> classes;
  std::vector<Signature> signatures;

  int num_classes() const noexcept { return static_cast<int>(classes.size()); }
  /// Class index of a non-separator vertex, -1 for separator vertices.
  std::vector<int> class_of;
};

/// Sum over edges of min(position(u), position(v)).
Cost evaluate_cost(const Graph& g, const Ordering& ord);

/// Number of neighbors of v placed strictly after v.
int right_degree(const Graph& g, const Ordering& ord, Vertex v);

/// Sum over vertices of position(v) * right_degree(v); equal to evaluate_cost.
Cost cost_from_right_degrees(const Graph& g, const Ordering& ord);

/// Throws InvalidInput for unknown or repeated separator vertices and for
/// separators with more than 64 vertices.
ClassPartition partition_by_separator(const Graph& g, std::span<const Vertex> separator);

/// Exchanges the vertices at ranks p and p+1. They must be non-adjacent with
/// equal right degree (cost is then unchanged); throws PreconditionError otherwise.
Ordering swap_equal_rd_nonadjacent(const Graph& g, const Ordering& ord, Position p);

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex v renamed to mapping[v].
Graph relabel(const Graph& g, std::span<const Vertex> mapping);

bool is_connected(const Graph& g);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);
bool is_clique_modulator(const Graph& g, std::span<const Vertex> modulator);

/// G(n, p) random graph, reproducible for a given seed.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace msvc
