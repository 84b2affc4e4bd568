#include "msvc/execution.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msvc {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) noexcept {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t factorial(int k) noexcept {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out = saturating_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<Vertex> nth_permutation(std::span<const Vertex> items, std::uint64_t index) {
  std::vector<Vertex> pool(items.begin(), items.end());
  std::vector<Vertex> out;
  out.reserve(pool.size());
  while (!pool.empty()) {
    const std::uint64_t block = factorial(static_cast<int>(pool.size()) - 1);
    const std::uint64_t pick = index / block;
    index %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

int available_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace msvc
