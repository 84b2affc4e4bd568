#include "msvc/iqp.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "msvc/errors.hpp"

namespace msvc {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("IQP product overflows 128 bits");
  return out;
}

Wide checked_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("IQP sum overflows 128 bits");
  return out;
}

IqpInt narrow(Wide value) {
  if (value > std::numeric_limits<IqpInt>::max() || value < std::numeric_limits<IqpInt>::min()) {
    throw ArithmeticOverflow("IQP objective does not fit in 64 bits");
  }
  return static_cast<IqpInt>(value);
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Domain {
  std::vector<IqpInt> lo;
  std::vector<IqpInt> hi;
};

// Objective folded into diagonal, pairwise and linear parts.
struct FoldedObjective {
  int t = 0;
  std::vector<IqpInt> diag;
  std::vector<IqpInt> linear;
  std::vector<std::vector<std::pair<int, IqpInt>>> partners;  // j != i, coeff Q_ij + Q_ji
  IqpInt offset = 0;

  explicit FoldedObjective(const IqpInstance& inst) : t(inst.num_vars()), diag(t, 0), linear(t), partners(t) {
    for (int i = 0; i < t; ++i) linear[i] = inst.linear(i);
    offset = inst.offset();
    std::map<std::pair<int, int>, Wide> pair_coeff;
    for (const auto& [key, coeff] : inst.quadratic_entries()) {
      const auto [i, j] = key;
      if (i == j) {
        diag[i] = narrow(checked_add(diag[i], coeff));
      } else {
        auto& slot = pair_coeff[{std::min(i, j), std::max(i, j)}];
        slot = checked_add(slot, coeff);
      }
    }
    for (const auto& [key, coeff] : pair_coeff) {
      if (coeff == 0) continue;
      partners[key.first].emplace_back(key.second, narrow(coeff));
      partners[key.second].emplace_back(key.first, narrow(coeff));
    }
  }
};

// min over integer x in [lo, hi] of a x^2 + b x.
Wide univariate_min(Wide a, Wide b, Wide lo, Wide hi) {
  auto value = [&](Wide x) { return checked_add(checked_mul(checked_mul(a, x), x), checked_mul(b, x)); };
  Wide best = std::min(value(lo), value(hi));
  if (a > 0) {
    // Real minimizer -b / 2a; the integer optimum is one of its neighbors.
    const Wide left = std::clamp(floor_div(-b, 2 * a), lo, hi);
    const Wide right = std::clamp(ceil_div(-b, 2 * a), lo, hi);
    best = std::min({best, value(left), value(right)});
  }
  return best;
}

class BranchAndBound {
 public:
  BranchAndBound(const IqpInstance& inst, const IqpOptions& options)
      : inst_(inst), folded_(inst), budget_(options.node_budget) {}

  IqpResult run() {
    Domain root;
    for (int i = 0; i < inst_.num_vars(); ++i) {
      root.lo.push_back(inst_.lower(i));
      root.hi.push_back(inst_.upper(i));
    }
    descend(std::move(root));
    IqpResult result;
    result.nodes = nodes_;
    if (have_incumbent_) result.solution = IqpSolution{std::move(incumbent_), incumbent_value_};
    return result;
  }

 private:
  // Activity-based bound tightening to a fixpoint. False when a domain empties.
  bool propagate(Domain& dom) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& row : inst_.constraints()) {
        Wide min_act = 0;
        Wide max_act = 0;
        for (const auto& [var, a] : row.terms) {
          const Wide x = checked_mul(a, dom.lo[var]);
          const Wide y = checked_mul(a, dom.hi[var]);
          min_act = checked_add(min_act, std::min(x, y));
          max_act = checked_add(max_act, std::max(x, y));
        }
        const Wide rhs = row.rhs;
        const bool equality = row.sense == ConstraintSense::equal;
        if (min_act > rhs || (equality && max_act < rhs)) return false;
        for (const auto& [var, a] : row.terms) {
          const Wide x = checked_mul(a, dom.lo[var]);
          const Wide y = checked_mul(a, dom.hi[var]);
          // a * v <= rhs - (min activity of the others)
          const Wide upper_budget = rhs - (min_act - std::min(x, y));
          Wide new_lo = dom.lo[var];
          Wide new_hi = dom.hi[var];
          if (a > 0) {
            new_hi = std::min(new_hi, floor_div(upper_budget, a));
          } else {
            new_lo = std::max(new_lo, ceil_div(upper_budget, a));
          }
          if (equality) {
            // a * v >= rhs - (max activity of the others)
            const Wide lower_budget = rhs - (max_act - std::max(x, y));
            if (a > 0) {
              new_lo = std::max(new_lo, ceil_div(lower_budget, a));
            } else {
              new_hi = std::min(new_hi, floor_div(lower_budget, a));
            }
          }
          if (new_lo > new_hi) return false;
          if (new_lo != dom.lo[var] || new_hi != dom.hi[var]) {
            dom.lo[var] = static_cast<IqpInt>(new_lo);
            dom.hi[var] = static_cast<IqpInt>(new_hi);
            changed = true;
            // Activities are stale now; restart from the next pass.
            break;
          }
        }
      }
    }
    return true;
  }

  // Each free variable minimized on its own (cross terms with fixed
  // variables folded into its linear coefficient), free-free products bounded
  // by their box corners, fixed part exact.
  Wide lower_bound(const Domain& dom) const {
    const int t = folded_.t;
    Wide bound = folded_.offset;
    for (int i = 0; i < t; ++i) {
      const bool fixed_i = dom.lo[i] == dom.hi[i];
      Wide lin = folded_.linear[i];
      for (const auto& [j, p] : folded_.partners[i]) {
        const bool fixed_j = dom.lo[j] == dom.hi[j];
        if (fixed_j && (!fixed_i || j > i)) {
          lin = checked_add(lin, checked_mul(p, dom.lo[j]));
        } else if (!fixed_j && !fixed_i && j > i) {
          const Wide corners[] = {checked_mul(checked_mul(p, dom.lo[i]), dom.lo[j]),
                                  checked_mul(checked_mul(p, dom.lo[i]), dom.hi[j]),
                                  checked_mul(checked_mul(p, dom.hi[i]), dom.lo[j]),
                                  checked_mul(checked_mul(p, dom.hi[i]), dom.hi[j])};
          bound = checked_add(bound, *std::min_element(std::begin(corners), std::end(corners)));
        }
      }
      bound = checked_add(bound, univariate_min(folded_.diag[i], lin, dom.lo[i], dom.hi[i]));
    }
    return bound;
  }

  void descend(Domain dom) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("IQP search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (!propagate(dom)) return;
    if (have_incumbent_ && lower_bound(dom) >= incumbent_value_) return;

    const auto free_var = std::find_if(dom.lo.begin(), dom.lo.end(), [&, i = 0](IqpInt lo) mutable {
      return lo != dom.hi[i++];
    });
    if (free_var == dom.lo.end()) {
      if (!inst_.is_feasible(dom.lo)) throw InternalError("propagation accepted an infeasible point");
      const IqpInt value = inst_.objective(dom.lo);
      // Points arrive in lexicographic order, so only strict improvements count.
      if (!have_incumbent_ || value < incumbent_value_) {
        incumbent_ = dom.lo;
        incumbent_value_ = value;
        have_incumbent_ = true;
      }
      return;
    }
    const auto var = static_cast<std::size_t>(free_var - dom.lo.begin());
    for (IqpInt v = dom.lo[var]; v <= dom.hi[var]; ++v) {
      Domain child = dom;
      child.lo[var] = v;
      child.hi[var] = v;
      descend(std::move(child));
    }
  }

  const IqpInstance& inst_;
  FoldedObjective folded_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<IqpInt> incumbent_;
  IqpInt incumbent_value_ = 0;
  bool have_incumbent_ = false;
};

}  // namespace

void IqpInstance::check_var(int i) const {
  if (i < 0 || i >= num_vars()) throw InvalidInput("IQP variable index " + std::to_string(i) + " out of range");
}

int IqpInstance::add_variable(IqpInt lo, IqpInt hi) {
  if (lo > hi) throw InvalidInput("IQP variable bounds [" + std::to_string(lo) + ", " + std::to_string(hi) + "] are empty");
  lower_.push_back(lo);
  upper_.push_back(hi);
  linear_.push_back(0);
  return num_vars() - 1;
}

void IqpInstance::add_quadratic(int i, int j, IqpInt coeff) {
  check_var(i);
  check_var(j);
  auto& slot = quadratic_[{i, j}];
  slot = narrow(checked_add(slot, coeff));
  if (slot == 0) quadratic_.erase({i, j});
}

void IqpInstance::add_linear(int i, IqpInt coeff) {
  check_var(i);
  linear_[i] = narrow(checked_add(linear_[i], coeff));
}

void IqpInstance::add_constraint(std::vector<LinearTerm> terms, ConstraintSense sense, IqpInt rhs) {
  std::map<int, Wide> merged;
  for (const auto& term : terms) {
    check_var(term.var);
    merged[term.var] = checked_add(merged[term.var], term.coeff);
  }
  LinearConstraint row;
  row.sense = sense;
  row.rhs = rhs;
  for (const auto& [var, coeff] : merged)
    if (coeff != 0) row.terms.push_back({var, narrow(coeff)});
  constraints_.push_back(std::move(row));
}

IqpInt IqpInstance::quadratic(int i, int j) const {
  const auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? 0 : it->second;
}

IqpInt IqpInstance::alpha() const {
  IqpInt out = 0;
  auto magnitude = [](IqpInt v) { return v < 0 ? -v : v; };
  for (const auto& [key, coeff] : quadratic_) out = std::max(out, magnitude(coeff));
  for (const auto& row : constraints_)
    for (const auto& term : row.terms) out = std::max(out, magnitude(term.coeff));
  return out;
}

IqpInt IqpInstance::objective(std::span<const IqpInt> x) const {
  if (static_cast<int>(x.size()) != num_vars()) throw InvalidInput("IQP point has wrong dimension");
  Wide total = offset_;
  for (const auto& [key, coeff] : quadratic_) {
    total = checked_add(total, checked_mul(checked_mul(coeff, x[key.first]), x[key.second]));
  }
  for (int i = 0; i < num_vars(); ++i) total = checked_add(total, checked_mul(linear_[i], x[i]));
  return narrow(total);
}

bool IqpInstance::is_feasible(std::span<const IqpInt> x) const {
  if (static_cast<int>(x.size()) != num_vars()) return false;
  for (int i = 0; i < num_vars(); ++i)
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  for (const auto& row : constraints_) {
    Wide lhs = 0;
    for (const auto& term : row.terms) lhs = checked_add(lhs, checked_mul(term.coeff, x[term.var]));
    if (row.sense == ConstraintSense::equal ? lhs != row.rhs : lhs > row.rhs) return false;
  }
  return true;
}

void IqpInstance::dump(std::ostream& out) const {
  out << "min\n";
  if (offset_ != 0) out << "offset " << offset_ << '\n';
  for (const auto& [key, coeff] : quadratic_) out << "q " << key.first << ' ' << key.second << ' ' << coeff << '\n';
  for (int i = 0; i < num_vars(); ++i)
    if (linear_[i] != 0) out << "c " << i << ' ' << linear_[i] << '\n';
  for (const auto& row : constraints_) {
    std::vector<IqpInt> dense(num_vars(), 0);
    for (const auto& term : row.terms) dense[term.var] = term.coeff;
    out << (row.sense == ConstraintSense::equal ? "eq" : "le");
    for (IqpInt a : dense) out << ' ' << a;
    out << ' ' << row.rhs << '\n';
  }
  for (int i = 0; i < num_vars(); ++i) out << "bound " << i << ' ' << lower_[i] << ' ' << upper_[i] << '\n';
}

IqpResult solve_iqp(const IqpInstance& inst, const IqpOptions& options) {
  return BranchAndBound(inst, options).run();
}

}  // namespace msvc
