#include <random>

#include "doctest.h"
#include "msvc/errors.hpp"
#include "msvc/graph.hpp"
#include "support/oracles.hpp"

using namespace msvc;

namespace {

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), InvalidInput);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), InvalidInput);
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(Graph(3, outside), InvalidInput);
}

TEST_CASE("adjacency is symmetric and degrees sum to 2m") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(9, 0.4, rng());
    int degree_sum = 0;
    for (Vertex u = 0; u < 9; ++u) {
      degree_sum += g.degree(u);
      for (Vertex v = 0; v < 9; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.num_edges());
  }
}

TEST_CASE("ordering is a bijection") {
  const auto ord = Ordering::from_sequence({2, 0, 1});
  CHECK(ord.position(2) == Position{1});
  CHECK(ord.position(0) == Position{2});
  CHECK(ord.at(Position{3}) == 1);
  for (Vertex v = 0; v < 3; ++v) CHECK(ord.at(ord.position(v)) == v);
  CHECK_THROWS_AS(Ordering::from_sequence({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Ordering::from_sequence({0, 3, 1}), InvalidInput);
}

TEST_CASE("evaluate_cost examples") {
  CHECK(evaluate_cost(Graph::complete(2), Ordering::from_sequence({1, 0})) == 1);
  CHECK(evaluate_cost(Graph::complete(3), Ordering::from_sequence({2, 0, 1})) == 4);
  // P_3 a-b-c with b first.
  CHECK(evaluate_cost(path(3), Ordering::from_sequence({1, 0, 2})) == 2);
  CHECK(evaluate_cost(Graph::empty(5), Ordering::identity(5)) == 0);
  CHECK_THROWS_AS(evaluate_cost(Graph::complete(3), Ordering::identity(4)), InvalidInput);
}

TEST_CASE("right_degree examples") {
  const Graph k2 = Graph::complete(2);
  const auto ord = Ordering::identity(2);
  CHECK(right_degree(k2, ord, 0) == 1);
  CHECK(right_degree(k2, ord, 1) == 0);
  const Graph k4 = Graph::complete(4);
  CHECK(right_degree(k4, Ordering::from_sequence({3, 1, 0, 2}), 1) == 2);
  CHECK(right_degree(Graph::empty(3), Ordering::identity(3), 1) == 0);
  CHECK_THROWS_AS(right_degree(k4, Ordering::identity(4), 7), InvalidInput);
}

TEST_CASE("cost from right degrees matches direct cost") {
  CHECK(cost_from_right_degrees(Graph::complete(3), Ordering::from_sequence({1, 2, 0})) == 4);
  CHECK(cost_from_right_degrees(path(3), Ordering::from_sequence({1, 0, 2})) == 2);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(n, 0.5, rng());
    const auto seq = testing::random_sequence(n, rng);
    const auto ord = Ordering::from_sequence(seq);
    const Cost direct = testing::direct_cost(g, seq);
    CHECK(evaluate_cost(g, ord) == direct);
    CHECK(cost_from_right_degrees(g, ord) == direct);
    int rd_sum = 0;
    for (Vertex v = 0; v < n; ++v) rd_sum += right_degree(g, ord, v);
    CHECK(rd_sum == g.num_edges());
  }
}

TEST_CASE("connected graphs cost at least n - 1") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_connected_graph(n, rng);
    const auto ord = Ordering::from_sequence(testing::random_sequence(n, rng));
    CHECK(evaluate_cost(g, ord) >= n - 1);
  }
}

TEST_CASE("partition_by_separator examples") {
  const std::vector<Vertex> center{0};
  auto part = partition_by_separator(star(3), center);
  REQUIRE(part.num_classes() == 1);
  CHECK(part.classes[0] == std::vector<Vertex>{1, 2, 3});

  const std::vector<Vertex> middle{1};
  part = partition_by_separator(path(3), middle);
  REQUIRE(part.num_classes() == 1);
  CHECK(part.classes[0] == std::vector<Vertex>{0, 2});

  const std::vector<Vertex> inner{1, 2};
  part = partition_by_separator(path(4), inner);
  REQUIRE(part.num_classes() == 2);
  CHECK(part.classes[0] == std::vector<Vertex>{0});
  CHECK(part.signatures[0] == 0b01);
  CHECK(part.classes[1] == std::vector<Vertex>{3});
  CHECK(part.signatures[1] == 0b10);

  const std::vector<Vertex> bogus{9};
  CHECK_THROWS_AS(partition_by_separator(path(3), bogus), InvalidInput);
}

TEST_CASE("partition classes are disjoint, cover V minus S, and share signatures") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(n, 0.5, rng());
    std::vector<Vertex> sep;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) sep.push_back(v);
    const auto part = partition_by_separator(g, sep);
    CHECK(part.num_classes() <= (1 << sep.size()));
    std::vector<int> hits(n, 0);
    for (Vertex s : sep) ++hits[s];
    for (int c = 0; c < part.num_classes(); ++c) {
      for (Vertex v : part.classes[c]) {
        ++hits[v];
        for (Vertex s : sep) {
          const auto bit = std::find(part.separator.begin(), part.separator.end(), s) - part.separator.begin();
          CHECK(g.adjacent(v, s) == static_cast<bool>(part.signatures[c] >> bit & 1));
        }
      }
      if (c > 0) CHECK(part.signatures[c - 1] < part.signatures[c]);
    }
    for (Vertex v = 0; v < n; ++v) CHECK(hits[v] == 1);
  }
}

TEST_CASE("swap_equal_rd_nonadjacent") {
  CHECK(evaluate_cost(Graph::empty(3), swap_equal_rd_nonadjacent(Graph::empty(3), Ordering::identity(3), Position{1})) == 0);

  const Graph s = star(3);
  const auto ord = Ordering::from_sequence({1, 2, 3, 0});
  const auto swapped = swap_equal_rd_nonadjacent(s, ord, Position{1});
  CHECK(swapped.sequence()[0] == 2);
  CHECK(evaluate_cost(s, swapped) == evaluate_cost(s, ord));

  // Adjacent pair and unequal right degrees are both refused.
  CHECK_THROWS_AS(swap_equal_rd_nonadjacent(s, Ordering::from_sequence({0, 1, 2, 3}), Position{1}), PreconditionError);
  CHECK_THROWS_AS(swap_equal_rd_nonadjacent(path(4), Ordering::from_sequence({0, 2, 1, 3}), Position{1}),
                  PreconditionError);
  CHECK_THROWS_AS(swap_equal_rd_nonadjacent(s, ord, Position{4}), PreconditionError);
}

TEST_CASE("equal right degree swaps preserve cost on random instances") {
  std::mt19937_64 rng(23);
  int exercised = 0;
  for (int trial = 0; trial < 3000 && exercised < 200; ++trial) {
    const Graph g = random_graph(8, 0.35, rng());
    const auto ord = Ordering::from_sequence(testing::random_sequence(8, rng));
    const Position p{1 + static_cast<int>(rng() % 7)};
    const Vertex u = ord.at(p);
    const Vertex v = ord.at(Position{p.value + 1});
    if (g.adjacent(u, v) || right_degree(g, ord, u) != right_degree(g, ord, v)) continue;
    ++exercised;
    CHECK(evaluate_cost(g, swap_equal_rd_nonadjacent(g, ord, p)) == evaluate_cost(g, ord));
  }
  CHECK(exercised == 200);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(6)).num_edges() == 0);
  CHECK(complement(Graph::empty(5)) == Graph::complete(5));
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(7, 0.5, rng());
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(c.num_edges() + g.num_edges() == 21);
  }
}

TEST_CASE("vertex cover and clique modulator predicates") {
  const std::vector<Vertex> center{0};
  CHECK(is_vertex_cover(star(3), center));
  const std::vector<Vertex> leaf{1};
  CHECK_FALSE(is_vertex_cover(star(3), leaf));
  const std::vector<Vertex> none;
  CHECK(is_clique_modulator(Graph::complete(4), none));
  CHECK_FALSE(is_clique_modulator(path(3), none));
  CHECK_FALSE(is_clique_modulator(path(3), leaf));
  CHECK(is_clique_modulator(path(3), center));
}

TEST_CASE("random_graph is reproducible") {
  CHECK(random_graph(12, 0.3, 99) == random_graph(12, 0.3, 99));
  CHECK(random_graph(10, 0.0, 1).num_edges() == 0);
  CHECK(random_graph(10, 1.0, 1).num_edges() == 45);
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), InvalidInput);
}
