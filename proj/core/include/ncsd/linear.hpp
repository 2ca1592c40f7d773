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

#ifndef NCSD_LINEAR_HPP_
#define NCSD_LINEAR_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncsd/rational.hpp"

namespace ncsd::exact {

enum class Relation { kLessEq, kEqual };

// One linear constraint: sum(coeffs[v] * v) REL constant.
// ">=" inputs are normalized to "<=" by negation at construction time.
//
// Canonical form (after canonicalize()): no zero coefficients, all
// coefficients and the constant are integers with overall content 1, and an
// equality's coefficient on the lexicographically-smallest variable is
// positive. A constraint with no variables left is trivial; it is either
// redundant (0 <= b with b >= 0, 0 = 0) or witnesses infeasibility.
struct LinearConstraint {
  std::map<std::string, Rational> coeffs;
  Rational constant;
  Relation rel = Relation::kLessEq;

  Rational coeff(const std::string& var) const;
  bool trivial() const { return coeffs.empty(); }
  // Only meaningful for trivial() constraints.
  bool trivially_true() const;
  bool trivially_false() const { return trivial() && !trivially_true(); }

  // Value of the left-hand side at a point (missing variables read as 0).
  Rational lhs_at(const std::map<std::string, Rational>& point) const;
  bool satisfied_by(const std::map<std::string, Rational>& point) const;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

LinearConstraint make_le(std::map<std::string, Rational> coeffs, Rational rhs);
LinearConstraint make_ge(std::map<std::string, Rational> coeffs, Rational rhs);
LinearConstraint make_eq(std::map<std::string, Rational> coeffs, Rational rhs);

// Returns the canonical representative of the same constraint.
LinearConstraint canonicalize(const LinearConstraint& c);

// Deterministic total order on canonical constraints (equalities first, then
// by coefficient support and constant). Used to sort emitted systems.
bool canonical_less(const LinearConstraint& a, const LinearConstraint& b);

// A conjunction of linear constraints over an ordered variable list.
struct ConstraintSystem {
  std::vector<std::string> vars;
  std::vector<LinearConstraint> cons;

  bool has_var(const std::string& v) const;
  void add_var(const std::string& v);
  // Validates that the constraint touches only declared variables.
  void add(LinearConstraint c);

  // True if some constraint is a trivially-false residue (e.g. 0 <= -1).
  bool trivially_infeasible() const;

  friend bool operator==(const ConstraintSystem&,
                         const ConstraintSystem&) = default;
};

// Canonicalizes every constraint, drops trivially-true rows, merges
// complementary inequality pairs {e <= b, -e <= -b} into equalities,
// deduplicates, and sorts into the deterministic canonical order.
// Trivially-false rows are kept: they witness infeasibility.
ConstraintSystem canonicalize(const ConstraintSystem& sys);

// Substitutes var := value everywhere and removes it from the variable list.
ConstraintSystem substitute(const ConstraintSystem& sys,
                            const std::string& var, const Rational& value);

// --- Text serialization ---------------------------------------------------
//
// One constraint per line:  2*s + c - eps <= 2
// Coefficients and constants are integers or "p/q" rationals; a leading
// constant term on the left-hand side is accepted and folded into the
// right-hand side on parse. Blank lines and '#' comment lines are skipped.

std::string to_text(const LinearConstraint& c,
                    const std::vector<std::string>& var_order);
std::string to_text(const ConstraintSystem& sys);
// Parses a full system. Variables are collected in first-appearance order
// unless an explicit "vars: a b c" header line is present.
ConstraintSystem system_from_text(const std::string& text);
LinearConstraint constraint_from_text(const std::string& line);

// --- JSON serialization ---------------------------------------------------
//
// {"vars": ["s", ...],
//  "cons": [{"coeffs": {"s": "2", ...}, "rel": "<=", "const": "p/q"}, ...]}

std::string to_json(const ConstraintSystem& sys);
ConstraintSystem system_from_json(const std::string& json_text);

}  // namespace ncsd::exact

#endif  // NCSD_LINEAR_HPP_
