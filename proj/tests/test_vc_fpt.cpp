#include <algorithm>
#include <random>

#include "doctest.h"
#include "msvc/errors.hpp"
#include "msvc/oracle.hpp"
#include "msvc/vc_fpt.hpp"
#include "support/oracles.hpp"

using namespace msvc;

namespace {

Graph from_edges(int n, std::vector<Edge> edges) { return Graph(n, edges); }

const Graph kStar3 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
const Graph kPath3 = from_edges(3, {{0, 1}, {1, 2}});
const Graph kPath4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
const Graph kCycle4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

// Smallest cover by subset enumeration.
int cover_number(const Graph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v);
    if (is_vertex_cover(g, set)) best = std::min(best, static_cast<int>(set.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("min_vertex_cover examples") {
  CHECK(min_vertex_cover(kStar3, 3) == std::vector<Vertex>{0});
  const auto c4 = min_vertex_cover(kCycle4, 3);
  REQUIRE(c4);
  CHECK(c4->size() == 2);
  CHECK(!kCycle4.adjacent((*c4)[0], (*c4)[1]));
  CHECK(min_vertex_cover(Graph::complete(5), 5)->size() == 4);
  CHECK_FALSE(min_vertex_cover(Graph::complete(5), 3));
  CHECK(min_vertex_cover(Graph::empty(4), 0)->empty());
}

TEST_CASE("min_vertex_cover is minimum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, 0.4, rng());
    const auto cover = min_vertex_cover(g, n);
    REQUIRE(cover);
    CHECK(is_vertex_cover(g, *cover));
    CHECK(static_cast<int>(cover->size()) == cover_number(g));
  }
}

TEST_CASE("realize_configuration examples") {
  const auto star = make_vc_instance(kStar3, {0});
  const auto ord = realize_configuration(star, {{0}, {2}});
  CHECK(ord == Ordering::from_sequence({0, 1, 2, 3}));
  CHECK(evaluate_cost(kStar3, ord) == 3);

  const auto p3 = make_vc_instance(kPath3, {1});
  const auto early = realize_configuration(p3, {{1}, {1}});
  CHECK(early == Ordering::from_sequence({0, 2, 1}));
  CHECK(evaluate_cost(kPath3, early) == 3);
  CHECK(evaluate_cost(kPath3, realize_configuration(p3, {{1}, {2}})) == 2);

  // {0} between the cover vertices and {3} last pays for edge 2-3 at position 3.
  const auto p4 = make_vc_instance(kPath4, {1, 2});
  const auto split = realize_configuration(p4, {{1, 2}, {2, 3}});
  CHECK(split == Ordering::from_sequence({1, 0, 2, 3}));
  CHECK(evaluate_cost(kPath4, split) == 5);
  const auto best = realize_configuration(p4, {{1, 2}, {3, 3}});
  CHECK(best == Ordering::from_sequence({1, 2, 0, 3}));
  CHECK(evaluate_cost(kPath4, best) == 4);
}

TEST_CASE("realize_configuration validates its input") {
  const auto p4 = make_vc_instance(kPath4, {1, 2});
  CHECK_THROWS_AS(realize_configuration(p4, {{1, 3}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(realize_configuration(p4, {{1, 2}, {1}}), InvalidInput);
  CHECK_THROWS_AS(realize_configuration(p4, {{1, 2}, {0, 4}}), InvalidInput);
  CHECK_THROWS_AS(make_vc_instance(kPath4, {1}), InvalidInput);
}

TEST_CASE("classes inside a block follow non-increasing right degree") {
  // Cover {0, 1}; class {2} sees both, class {3} sees only 0.
  const Graph g = from_edges(4, {{0, 2}, {1, 2}, {0, 3}});
  const auto inst = make_vc_instance(g, {0, 1});
  REQUIRE(inst.partition.num_classes() == 2);
  const std::vector<Vertex> sigma{0, 1};
  CHECK(class_right_degree(inst, sigma, 0, 1) == 1);  // {3}
  CHECK(class_right_degree(inst, sigma, 1, 1) == 2);  // {2}
  CHECK(class_right_degree(inst, sigma, 1, 2) == 1);
  CHECK(class_right_degree(inst, sigma, 1, 3) == 0);
  const auto ord = realize_configuration(inst, {sigma, {1, 1}});
  CHECK(ord == Ordering::from_sequence({2, 3, 0, 1}));
}

TEST_CASE("solve_vc_fpt examples") {
  CHECK(solve_vc_fpt(kStar3, 3).cost == 3);
  CHECK(solve_vc_fpt(kCycle4, 3).cost == 6);
  CHECK(solve_vc_fpt(kPath3, 4).cost == 2);
  CHECK(solve_vc_fpt(Graph::empty(3), 0).cost == 0);
  CHECK_THROWS_AS(solve_vc_fpt(Graph::complete(5), 3), ParameterExceeded);
  VcOptions tight;
  tight.configuration_budget = 10;
  CHECK_THROWS_AS(solve_vc_fpt(Graph::complete(5), 4, tight), BudgetExceeded);
}

TEST_CASE("solve_vc_fpt matches the enumeration oracle") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.5, rng());
    const auto res = solve_vc_fpt(g, n);
    CHECK(res.cost == testing::enumerate_min_cost(g));
    CHECK(evaluate_cost(g, res.ordering) == res.cost);
  }
}

TEST_CASE("solved orderings keep classes contiguous with monotone right degrees per block") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_connected_graph(8, rng);
    const auto cover = min_vertex_cover(g, 8);
    const auto inst = make_vc_instance(g, *cover);
    const auto res = solve_vc_instance(inst);
    const auto seq = res.ordering.sequence();
    const auto& class_of = inst.partition.class_of;
    for (int c = 0; c < inst.partition.num_classes(); ++c) {
      std::vector<int> ranks;
      for (Vertex v : inst.partition.classes[c]) ranks.push_back(res.ordering.position(v).value);
      std::sort(ranks.begin(), ranks.end());
      CHECK(ranks.back() - ranks.front() + 1 == static_cast<int>(ranks.size()));
    }
    // Between consecutive cover vertices the right degrees never increase.
    for (std::size_t r = 0; r + 1 < seq.size(); ++r) {
      if (class_of[seq[r]] == -1 || class_of[seq[r + 1]] == -1) continue;
      CHECK(right_degree(g, res.ordering, seq[r]) >= right_degree(g, res.ordering, seq[r + 1]));
    }
  }
}

TEST_CASE("permuting members of one class leaves the cost unchanged") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(8, 0.3, rng());
    const auto inst = make_vc_instance(g, *min_vertex_cover(g, 8));
    const auto res = solve_vc_instance(inst);
    std::vector<Vertex> seq(res.ordering.sequence().begin(), res.ordering.sequence().end());
    for (const auto& members : inst.partition.classes) {
      std::vector<int> slots;
      for (Vertex v : members) slots.push_back(res.ordering.position(v).value - 1);
      std::sort(slots.begin(), slots.end());
      auto shuffled = members;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t i = 0; i < slots.size(); ++i) seq[slots[i]] = shuffled[i];
    }
    CHECK(testing::direct_cost(g, seq) == res.cost);
  }
}

TEST_CASE("serial and parallel VC search agree; result is independent of cover labels") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(8, 0.35, rng());
    VcOptions serial;
    serial.exec = Execution::serial;
    const auto a = solve_vc_fpt(g, 8, serial);
    const auto b = solve_vc_fpt(g, 8);
    CHECK(a.cost == b.cost);
    CHECK(a.ordering == b.ordering);
    CHECK(a.configurations == b.configurations);
    const Graph h = relabel(g, testing::random_sequence(8, rng));
    CHECK(solve_vc_fpt(h, 8).cost == a.cost);
  }
}
