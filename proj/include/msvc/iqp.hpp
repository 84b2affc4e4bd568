#pragma once

// Small exact integer quadratic programs over finite boxes.
//
//   minimize  x^T Q x + c^T x + offset
//   s.t.      A_eq x = b_eq,  A_le x <= b_le,  lo <= x <= hi,  x integer
//
// All arithmetic is exact (128-bit intermediates, overflow raises).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace msvc {

using IqpInt = std::int64_t;

struct LinearTerm {
  int var = 0;
  IqpInt coeff = 0;
};

enum class ConstraintSense { equal, less_equal };

struct LinearConstraint {
  std::vector<LinearTerm> terms;  ///< one entry per variable, sorted by var
  ConstraintSense sense = ConstraintSense::equal;
  IqpInt rhs = 0;
};

class IqpInstance {
 public:
  /// Returns the new variable's index. Throws InvalidInput if lo > hi.
  int add_variable(IqpInt lo, IqpInt hi);

  /// Q[i][j] += coeff. Off-diagonal entries act through Q[i][j] + Q[j][i].
  void add_quadratic(int i, int j, IqpInt coeff);
  void add_linear(int i, IqpInt coeff);
  void add_offset(IqpInt value) { offset_ += value; }

  /// Repeated variables in `terms` are merged; zero coefficients dropped.
  void add_constraint(std::vector<LinearTerm> terms, ConstraintSense sense, IqpInt rhs);
  void add_equality(std::vector<LinearTerm> terms, IqpInt rhs) {
    add_constraint(std::move(terms), ConstraintSense::equal, rhs);
  }
  void add_less_equal(std::vector<LinearTerm> terms, IqpInt rhs) {
    add_constraint(std::move(terms), ConstraintSense::less_equal, rhs);
  }

  int num_vars() const noexcept { return static_cast<int>(lower_.size()); }
  IqpInt lower(int i) const { return lower_[i]; }
  IqpInt upper(int i) const { return upper_[i]; }
  IqpInt quadratic(int i, int j) const;
  IqpInt linear(int i) const { return linear_[i]; }
  IqpInt offset() const noexcept { return offset_; }
  const std::map<std::pair<int, int>, IqpInt>& quadratic_entries() const noexcept { return quadratic_; }
  std::span<const LinearConstraint> constraints() const noexcept { return constraints_; }

  /// Largest absolute entry of Q and of the constraint matrix.
  IqpInt alpha() const;

  /// Exact objective value. Throws ArithmeticOverflow if it leaves int64.
  IqpInt objective(std::span<const IqpInt> x) const;

  /// Bounds and every constraint, checked in exact integer arithmetic.
  bool is_feasible(std::span<const IqpInt> x) const;

  /// Debug dump: `min`, `offset v`, `q i j coeff`, `c i coeff`,
  /// `eq|le a_0 .. a_{t-1} rhs`, `bound i lo hi`. Not a stable format.
  void dump(std::ostream& out) const;

 private:
  void check_var(int i) const;

  std::vector<IqpInt> lower_;
  std::vector<IqpInt> upper_;
  std::vector<IqpInt> linear_;
  std::map<std::pair<int, int>, IqpInt> quadratic_;
  std::vector<LinearConstraint> constraints_;
  IqpInt offset_ = 0;
};

struct IqpSolution {
  std::vector<IqpInt> values;
  IqpInt objective = 0;
};

inline constexpr std::uint64_t kDefaultIqpNodeBudget = 1'000'000'000;

struct IqpOptions {
  std::uint64_t node_budget = kDefaultIqpNodeBudget;
};

struct IqpResult {
  std::optional<IqpSolution> solution;  ///< empty means infeasible
  std::uint64_t nodes = 0;

  bool feasible() const noexcept { return solution.has_value(); }
};

/// Depth-first branch and bound over variables in index order, values
/// ascending, with bound propagation at every node. Among optimal points the
/// lexicographically smallest is returned. Throws BudgetExceeded once more
/// than `node_budget` nodes have been explored.
IqpResult solve_iqp(const IqpInstance& inst, const IqpOptions& options = {});

}  // namespace msvc
