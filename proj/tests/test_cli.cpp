#include <string>

#include "doctest.h"
#include "msvc/cli.hpp"
#include "msvc/errors.hpp"
#include "msvc/io.hpp"

using namespace msvc;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_graph reads headers, edges, comments and blank lines") {
  const auto lg = parse_graph("# a path\n\n3 2\n1 2   # first\n2 3\n");
  CHECK(lg.graph.num_vertices() == 3);
  CHECK(lg.graph.num_edges() == 2);
  CHECK(lg.graph.adjacent(0, 1));
  CHECK(lg.graph.adjacent(1, 2));
  CHECK(lg.labels == std::vector<int>{1, 2, 3});
  CHECK(parse_graph("0 0").graph.num_vertices() == 0);
  CHECK(parse_graph(format_graph(lg)).graph == lg.graph);
}

TEST_CASE("parse_graph errors name the offending line") {
  CHECK(error_line("3 2\n1 2\n2 2\n") == 3);
  CHECK(error_line("3 2\n1 2\n1 4\n") == 3);
  CHECK(error_line("3 2\n1 2\n2 1\n") == 3);
  CHECK(error_line("3 3\n1 2\n2 3\n") == 3);
  CHECK(error_line("3 2\n1 2 3\n") == 2);
  CHECK(error_line("3 x\n") == 1);
  CHECK(error_line("# nothing") == 1);
  try {
    parse_graph("2 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(e.kind() == "parse-error");
  }
}

TEST_CASE("reports recompute the cost") {
  const auto lg = parse_graph("3 2\n1 2\n2 3\n");
  const auto ord = Ordering::from_sequence({1, 0, 2});
  const auto report = make_report(lg, "brute", std::nullopt, ord, 2, nlohmann::json::object(), 0.5);
  CHECK(report.ordering == std::vector<int>{2, 1, 3});
  const auto j = report.to_json();
  CHECK(j["cost"] == 2);
  CHECK(j["algorithm"] == "brute");
  CHECK(j["k"].is_null());
  CHECK(j["ordering"] == nlohmann::json::array({2, 1, 3}));
  CHECK_THROWS_AS(make_report(lg, "brute", std::nullopt, ord, 3, nlohmann::json::object(), 0.0), InternalError);
}

TEST_CASE("error JSON shape") {
  const auto j = error_json("parse-error", "line 2: self-loop");
  CHECK(j["error"]["kind"] == "parse-error");
  CHECK(j["error"]["message"] == "line 2: self-loop");
}

TEST_CASE("algorithm names round-trip") {
  for (auto algo : {Algorithm::brute, Algorithm::greedy, Algorithm::vc, Algorithm::cm, Algorithm::automatic})
    CHECK(parse_algorithm(algorithm_name(algo)) == algo);
  CHECK_FALSE(parse_algorithm("ilp"));
}

TEST_CASE("solve_graph dispatch") {
  const auto p4 = parse_graph("4 3\n1 2\n2 3\n3 4\n");
  SolveSettings settings;
  for (auto algo : {Algorithm::brute, Algorithm::vc, Algorithm::cm, Algorithm::automatic}) {
    settings.algorithm = algo;
    CHECK(solve_graph(p4, settings).cost == 4);
  }
  settings.algorithm = Algorithm::automatic;
  CHECK(solve_graph(p4, settings).algorithm == "vc");

  settings.max_k = 0;
  settings.brute_cap = 3;
  CHECK_THROWS_AS(solve_graph(p4, settings), ParameterExceeded);
  settings.algorithm = Algorithm::vc;
  CHECK_THROWS_AS(solve_graph(p4, settings), ParameterExceeded);
}

TEST_CASE("verify_graph") {
  const auto gap = parse_graph("5 4\n1 3\n1 4\n2 3\n4 5\n");
  SolveSettings settings;
  const std::vector<Algorithm> all{Algorithm::brute, Algorithm::vc, Algorithm::cm, Algorithm::greedy};
  const auto report = verify_graph(gap, all, settings);
  CHECK(report.passed);
  CHECK(report.optimum == 6);
  CHECK(report.greedy_ratio == doctest::Approx(7.0 / 6.0));
  CHECK(report.to_json()["status"] == "PASS");

  const std::vector<Algorithm> greedy_only{Algorithm::greedy};
  CHECK_THROWS_AS(verify_graph(gap, greedy_only, settings), InvalidInput);
}
