#pragma once

// Algorithm dispatch behind the `msvc` command-line tool.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msvc/execution.hpp"
#include "msvc/io.hpp"
#include "msvc/oracle.hpp"

namespace msvc {

enum class Algorithm { brute, greedy, vc, cm, automatic };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

inline constexpr int kDefaultMaxK = 6;

struct SolveSettings {
  Algorithm algorithm = Algorithm::automatic;
  int max_k = kDefaultMaxK;
  int brute_cap = kDefaultBruteForceCap;
  /// Caps VC configurations and IQP nodes when set.
  std::optional<std::uint64_t> budget;
  Execution exec = Execution::parallel;
};

/// `automatic` resolves to vc, then cm, then brute, whichever first fits the
/// limits; throws ParameterExceeded if none does.
SolveReport solve_graph(const LabeledGraph& lg, const SolveSettings& settings);

struct VerifyReport {
  std::vector<SolveReport> runs;
  std::optional<Cost> optimum;
  std::optional<double> greedy_ratio;
  bool passed = false;
  std::vector<std::string> failures;

  nlohmann::json to_json() const;
};

/// Exact algorithms must agree on the cost; greedy must stay within 4x the
/// optimum. At least one exact algorithm is required.
VerifyReport verify_graph(const LabeledGraph& lg, std::span<const Algorithm> algorithms, const SolveSettings& settings);

/// Entry point of the tool; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace msvc
