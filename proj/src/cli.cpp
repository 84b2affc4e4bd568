#include "msvc/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "msvc/cm_fpt.hpp"
#include "msvc/errors.hpp"
#include "msvc/vc_fpt.hpp"

namespace msvc {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "brute") return Algorithm::brute;
  if (name == "greedy") return Algorithm::greedy;
  if (name == "vc") return Algorithm::vc;
  if (name == "cm") return Algorithm::cm;
  if (name == "auto") return Algorithm::automatic;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::brute: return "brute";
    case Algorithm::greedy: return "greedy";
    case Algorithm::vc: return "vc";
    case Algorithm::cm: return "cm";
    case Algorithm::automatic: return "auto";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Algorithm resolve_automatic(const Graph& g, const SolveSettings& settings) {
  if (min_vertex_cover(g, settings.max_k)) return Algorithm::vc;
  if (find_clique_modulator(g, settings.max_k)) return Algorithm::cm;
  if (g.num_vertices() <= settings.brute_cap) return Algorithm::brute;
  throw ParameterExceeded("no exact method applies: vertex cover and clique modulator both exceed max-k " +
                          std::to_string(settings.max_k) + " and n exceeds the brute-force cap " +
                          std::to_string(settings.brute_cap));
}

nlohmann::json labels_of(const LabeledGraph& lg, std::span<const Vertex> vertices) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : vertices) out.push_back(lg.labels[v]);
  return out;
}

}  // namespace

SolveReport solve_graph(const LabeledGraph& lg, const SolveSettings& settings) {
  const Graph& g = lg.graph;
  const auto start = Clock::now();
  Algorithm algo = settings.algorithm;
  nlohmann::json stats = nlohmann::json::object();
  if (algo == Algorithm::automatic) {
    algo = resolve_automatic(g, settings);
    stats["selected_by"] = "auto";
  }
  switch (algo) {
    case Algorithm::brute: {
      auto res = brute_force_msvc(g, settings.brute_cap, settings.exec);
      stats["nodes"] = res.nodes;
      return make_report(lg, "brute", std::nullopt, res.ordering, res.cost, std::move(stats), millis_since(start));
    }
    case Algorithm::greedy: {
      auto res = greedy_msvc(g);
      return make_report(lg, "greedy", std::nullopt, res.ordering, res.cost, std::move(stats), millis_since(start));
    }
    case Algorithm::vc: {
      VcOptions options;
      options.exec = settings.exec;
      if (settings.budget) options.configuration_budget = *settings.budget;
      auto cover = min_vertex_cover(g, settings.max_k);
      if (!cover) throw ParameterExceeded("minimum vertex cover is larger than " + std::to_string(settings.max_k));
      const auto inst = make_vc_instance(g, *cover);
      auto res = solve_vc_instance(inst, options);
      stats["configurations"] = res.configurations;
      stats["classes"] = res.num_classes;
      stats["cover"] = labels_of(lg, inst.cover);
      return make_report(lg, "vc", res.k, res.ordering, res.cost, std::move(stats), millis_since(start));
    }
    case Algorithm::cm: {
      CmOptions options;
      options.exec = settings.exec;
      if (settings.budget) options.iqp.node_budget = *settings.budget;
      auto res = solve_cm_fpt(g, settings.max_k, options);
      stats["permutations"] = res.permutations;
      stats["iqp_nodes"] = res.iqp_nodes;
      stats["classes"] = res.num_classes;
      stats["modulator_order"] = labels_of(lg, res.sigma_m);
      return make_report(lg, "cm", res.k, res.ordering, res.cost, std::move(stats), millis_since(start));
    }
    case Algorithm::automatic:
      break;
  }
  throw InternalError("unhandled algorithm");
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["status"] = passed ? "PASS" : "FAIL";
  j["optimum"] = optimum ? nlohmann::json(*optimum) : nlohmann::json(nullptr);
  j["greedy_ratio"] = greedy_ratio ? nlohmann::json(*greedy_ratio) : nlohmann::json(nullptr);
  j["runs"] = nlohmann::json::array();
  for (const auto& run : runs) j["runs"].push_back(run.to_json());
  j["failures"] = failures;
  return j;
}

VerifyReport verify_graph(const LabeledGraph& lg, std::span<const Algorithm> algorithms, const SolveSettings& settings) {
  VerifyReport report;
  std::optional<Cost> greedy_cost;
  bool any_exact = false;
  for (Algorithm algo : algorithms) {
    SolveSettings one = settings;
    one.algorithm = algo;
    SolveReport run = solve_graph(lg, one);
    if (algo == Algorithm::greedy) {
      greedy_cost = run.cost;
    } else {
      any_exact = true;
      if (!report.optimum) {
        report.optimum = run.cost;
      } else if (*report.optimum != run.cost) {
        report.failures.push_back(run.algorithm + " cost " + std::to_string(run.cost) + " differs from " +
                                  std::to_string(*report.optimum));
      }
    }
    report.runs.push_back(std::move(run));
  }
  if (!any_exact) throw InvalidInput("verify needs at least one exact algorithm (brute, vc, cm or auto)");
  if (greedy_cost) {
    const Cost opt = *report.optimum;
    report.greedy_ratio = opt == 0 ? 1.0 : static_cast<double>(*greedy_cost) / static_cast<double>(opt);
    if (*greedy_cost > 4 * opt) {
      report.failures.push_back("greedy cost " + std::to_string(*greedy_cost) + " exceeds 4 x optimum " +
                                std::to_string(opt));
    }
    if (*greedy_cost < opt) {
      report.failures.push_back("greedy cost " + std::to_string(*greedy_cost) + " is below the optimum " +
                                std::to_string(opt));
    }
  }
  report.passed = report.failures.empty();
  return report;
}

namespace {

struct CommonFlags {
  std::string file;
  std::vector<std::string> random;
  std::optional<std::uint64_t> seed;
  int max_k = kDefaultMaxK;
  int brute_cap = kDefaultBruteForceCap;
  std::optional<std::uint64_t> budget;
  bool compact = false;
  bool serial = false;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("graph", flags.file, "Edge-list graph file (`n m` header, 1-based `u v` lines)");
  cmd.add_option("--random", flags.random, "Generate G(N, P) instead of reading a file")
      ->expected(2)
      ->type_name("N P");
  cmd.add_option("--seed", flags.seed, "Seed for --random (required with it)");
  cmd.add_option("--max-k", flags.max_k, "Largest vertex cover / clique modulator accepted")->check(CLI::NonNegativeNumber);
  cmd.add_option("--brute-cap", flags.brute_cap, "Largest n for exhaustive search")->check(CLI::NonNegativeNumber);
  cmd.add_option("--budget", flags.budget, "VC configuration / IQP node budget");
  cmd.add_flag("--json", flags.compact, "Single-line JSON output");
  cmd.add_flag("--serial", flags.serial, "Use the serial reference kernels");
}

SolveSettings settings_from(const CommonFlags& flags) {
  SolveSettings settings;
  settings.max_k = flags.max_k;
  settings.brute_cap = flags.brute_cap;
  settings.budget = flags.budget;
  settings.exec = flags.serial ? Execution::serial : Execution::parallel;
  return settings;
}

LabeledGraph random_instance(const CommonFlags& flags, std::uint64_t seed) {
  int n = 0;
  double p = 0.0;
  try {
    n = std::stoi(flags.random[0]);
    p = std::stod(flags.random[1]);
  } catch (const std::exception&) {
    throw InvalidInput("--random expects an integer N and a probability P");
  }
  return with_default_labels(random_graph(n, p, seed));
}

std::vector<LabeledGraph> load_instances(const CommonFlags& flags, int count) {
  if (!flags.random.empty()) {
    if (!flags.file.empty()) throw InvalidInput("give either a graph file or --random, not both");
    if (!flags.seed) throw InvalidInput("--random requires --seed");
    std::vector<LabeledGraph> out;
    for (int i = 0; i < count; ++i) out.push_back(random_instance(flags, *flags.seed + static_cast<std::uint64_t>(i)));
    return out;
  }
  if (flags.file.empty()) throw InvalidInput("no graph file given");
  if (count != 1) throw InvalidInput("--count only applies to --random sweeps");
  return {read_graph_file(flags.file)};
}

void emit(const nlohmann::json& j, bool compact) {
  std::cout << (compact ? j.dump() : j.dump(2)) << '\n';
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact minimum sum vertex cover solvers"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string algo_name = "auto";
  auto* solve = app.add_subcommand("solve", "Solve one graph");
  add_common(*solve, solve_flags);
  solve->add_option("--algo", algo_name, "brute | greedy | vc | cm | auto")
      ->check(CLI::IsMember({"brute", "greedy", "vc", "cm", "auto"}));

  CommonFlags verify_flags;
  std::vector<std::string> algo_names{"brute", "vc", "cm"};
  int count = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check several algorithms on the same graphs");
  add_common(*verify, verify_flags);
  verify->add_option("--algos", algo_names, "Comma-separated algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "greedy", "vc", "cm", "auto"}));
  verify->add_option("--count", count, "Number of random instances (seeds seed..seed+count-1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const bool compact = solve->parsed() ? solve_flags.compact : verify_flags.compact;
  try {
    if (solve->parsed()) {
      auto settings = settings_from(solve_flags);
      settings.algorithm = *parse_algorithm(algo_name);
      const auto instances = load_instances(solve_flags, 1);
      emit(solve_graph(instances.front(), settings).to_json(), compact);
      return 0;
    }

    const auto settings = settings_from(verify_flags);
    std::vector<Algorithm> algos;
    for (const auto& name : algo_names) algos.push_back(*parse_algorithm(name));
    const auto instances = load_instances(verify_flags, count);
    if (instances.size() == 1) {
      const auto report = verify_graph(instances.front(), algos, settings);
      emit(report.to_json(), compact);
      return report.passed ? 0 : 1;
    }
    nlohmann::json sweep;
    sweep["instances"] = instances.size();
    sweep["failures"] = nlohmann::json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto report = verify_graph(instances[i], algos, settings);
      if (report.passed) {
        ++passed;
        continue;
      }
      nlohmann::json failure = report.to_json();
      failure["seed"] = *verify_flags.seed + i;
      failure["graph"] = format_graph(instances[i]);
      sweep["failures"].push_back(std::move(failure));
    }
    sweep["passed"] = passed;
    sweep["status"] = passed == instances.size() ? "PASS" : "FAIL";
    emit(sweep, compact);
    return passed == instances.size() ? 0 : 1;
  } catch (const Error& e) {
    emit(error_json(e.kind(), e.what()), compact);
    return 1;
  } catch (const std::exception& e) {
    emit(error_json("internal", e.what()), compact);
    return 1;
  }
}

}  // namespace msvc
