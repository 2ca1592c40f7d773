// Copyright 2026 The ncsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCSD_LP_HPP_
#define NCSD_LP_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncsd/linear.hpp"

namespace ncsd::exact {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// Result of a feasibility query over a constraint system with free variables.
// Exactly one of `point` (feasible) or `certificate` (infeasible) is set.
// The certificate is a Farkas witness: nonnegative multipliers, one per
// constraint in input order, whose combination yields 0 <= negative.
// Multipliers on equality rows may be negative.
struct FeasibilityResult {
  bool feasible = false;
  std::map<std::string, Rational> point;
  std::vector<Rational> certificate;
};

// Result of optimizing a linear objective over a constraint system.
struct OptimizeResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::map<std::string, Rational> point;
  std::vector<Rational> certificate;  // Farkas witness when infeasible.
};

// Decides feasibility of `sys` exactly. All variables are free (unbounded
// sign); bounds must appear as explicit constraints.
FeasibilityResult lp_feasible(const ConstraintSystem& sys);

// Maximizes sum(objective[v] * v) subject to `sys`, exactly.
OptimizeResult lp_maximize(const ConstraintSystem& sys,
                           const std::map<std::string, Rational>& objective);

// Minimizes sum(objective[v] * v) subject to `sys`, exactly.
OptimizeResult lp_minimize(const ConstraintSystem& sys,
                           const std::map<std::string, Rational>& objective);

enum class OptimizeSense { kMax, kMin };

inline OptimizeResult lp_optimize(const ConstraintSystem& sys,
                                  const std::map<std::string, Rational>& objective,
                                  OptimizeSense sense) {
  return sense == OptimizeSense::kMax ? lp_maximize(sys, objective)
                                      : lp_minimize(sys, objective);
}

// True when `candidate` is implied by `sys`: every point of `sys` satisfies
// it. For an inequality e <= b this maximizes e over `sys` and compares the
// optimum with b (an infeasible `sys` implies everything; unbounded means not
// implied). Equalities check both directions.
bool implies(const ConstraintSystem& sys, const LinearConstraint& candidate);

// Repeated implication tests against one growing system. The constructor
// pays one feasibility solve; each query then searches multipliers that
// recombine the rows into the candidate, a solve whose size is set by the
// variable count rather than the row count, and added constraints are cheap
// column appends. Every candidate variable must be declared in the system.
class ImplicationOracle {
 public:
  explicit ImplicationOracle(ConstraintSystem sys);
  ~ImplicationOracle();
  ImplicationOracle(ImplicationOracle&&) noexcept;
  ImplicationOracle& operator=(ImplicationOracle&&) noexcept;

  // False when the system was infeasible at construction; implies() is then
  // vacuously true.
  bool feasible() const;
  // True when every point of the system satisfies the candidate. Should
  // add() have made the system infeasible, a query may conservatively
  // return false; it never wrongly returns true.
  bool implies(const LinearConstraint& candidate);
  // Appends a constraint to the system.
  void add(const LinearConstraint& c);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// True when the two systems imply each other's constraints, i.e. they cut
// the same polyhedron over the union of their variables.
bool equivalent_systems(const ConstraintSystem& a, const ConstraintSystem& b);

// Removes constraints of `sys` that are implied by the remaining ones.
// Scans in input order, so the surviving set depends deterministically on
// ordering. Equalities are never removed.
ConstraintSystem remove_redundant(const ConstraintSystem& sys);

}  // namespace ncsd::exact

#endif  // NCSD_LP_HPP_
