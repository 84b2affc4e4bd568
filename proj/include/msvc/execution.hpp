#pragma once

// Shared enumeration helpers for the exact solvers. Each solver exposes an
// OpenMP path and a serial reference path selected by `Execution`; both return
// bit-identical results because the min-reduction is keyed on a total order.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

enum class Execution { serial, parallel };

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) noexcept;
/// k!, saturating at kSaturated.
std::uint64_t factorial(int k) noexcept;

/// The `index`-th permutation of `items` in lexicographic order of positions
/// within `items` (index 0 is `items` itself). Requires index < |items|!.
std::vector<Vertex> nth_permutation(std::span<const Vertex> items, std::uint64_t index);

/// Threads the parallel path will use (1 when built without OpenMP).
int available_threads() noexcept;

}  // namespace msvc
