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

#include "ncsd/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace ncsd::exact {

namespace {

// Dense exact tableau shared by the primal solver and the dual implication
// tester: minimization, one slack-or-artificial basis column per row, and a
// pivot loop whose pricing is Dantzig (most negative reduced cost) with a
// Bland's-rule fallback after kStallLimit pivots without strict improvement.
// Both rules break ties on the lowest column, so every run is deterministic,
// and the Bland phases keep degenerate plateaus from cycling. Columns at and
// beyond art_begin are artificial: they may leave the basis but never enter.
struct Tableau {
  std::size_t ncols = 0;
  std::size_t art_begin = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;
  std::vector<std::size_t> basis;
  bool cutoff_hit = false;

  Rational objective_value() const { return -obj[ncols]; }

  Rational column_value(std::size_t col) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] == col) return rows[i][ncols];
    }
    return Rational(0);
  }

  void pivot(std::size_t r, std::size_t e) {
    auto& prow = rows[r];
    Rational p = prow[e];
    for (auto& v : prow) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Rational f = rows[i][e];
      if (f.is_zero()) continue;
      auto& row = rows[i];
      for (std::size_t j = 0; j <= ncols; ++j) row[j] -= f * prow[j];
    }
    Rational f = obj[e];
    if (!f.is_zero()) {
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * prow[j];
    }
    basis[r] = e;
  }

  // Minimizes the current objective from the current basis. Returns false
  // when unbounded. When stop_below is set, stops early once the objective
  // value drops strictly below it (cutoff_hit reports this).
  bool run(const std::optional<Rational>& stop_below) {
    constexpr int kStallLimit = 12;
    cutoff_hit = false;
    int stall = 0;
    Rational last = objective_value();
    for (;;) {
      if (stop_below && objective_value() < *stop_below) {
        cutoff_hit = true;
        return true;
      }
      std::size_t enter = ncols;
      if (stall < kStallLimit) {
        for (std::size_t j = 0; j < art_begin; ++j) {
          if (obj[j].sign() < 0 && (enter == ncols || obj[j] < obj[enter])) {
            enter = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < art_begin; ++j) {
          if (obj[j].sign() < 0) {
            enter = j;
            break;
          }
        }
      }
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rational ratio = rows[i][ncols] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
      Rational now = objective_value();
      if (now < last) {
        stall = 0;
        last = std::move(now);
      } else {
        ++stall;
      }
    }
  }

  // After a zero-value phase 1, any artificial still basic sits at zero.
  // Pivot it out on any nonartificial column; a row with no such column is
  // a dependent original row and is dropped.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] < art_begin) continue;
      std::size_t col = ncols;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (!rows[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col != ncols) pivot(i, col);
    }
    std::vector<std::vector<Rational>> kept_rows;
    std::vector<std::size_t> kept_basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] >= art_begin) continue;
      kept_rows.push_back(std::move(rows[i]));
      kept_basis.push_back(basis[i]);
    }
    rows = std::move(kept_rows);
    basis = std::move(kept_basis);
  }
};

// Dense exact simplex over the standard form of a system with free
// variables. Each free variable x becomes u - w with u, w >= 0; every "<="
// row gains a slack; rows are sign-normalized to a nonnegative right-hand
// side; rows without a usable slack basis get an artificial.
class Simplex {
 public:
  explicit Simplex(const ConstraintSystem& sys) : sys_(sys) {
    const std::size_t nvars = sys.vars.size();
    for (std::size_t k = 0; k < nvars; ++k) col_of_var_[sys.vars[k]] = 2 * k;
    n_struct_ = 2 * nvars;

    std::size_t n_ineq = 0;
    for (const auto& c : sys.cons) {
      if (c.rel == Relation::kLessEq) ++n_ineq;
    }
    slack_begin_ = n_struct_;

    // First pass decides which rows need artificials.
    std::vector<int> sigma(sys.cons.size(), 1);
    std::vector<bool> needs_art(sys.cons.size(), false);
    slack_col_.assign(sys.cons.size(), 0);
    art_col_.assign(sys.cons.size(), 0);
    std::size_t slack_idx = 0;
    std::size_t n_art = 0;
    for (std::size_t k = 0; k < sys.cons.size(); ++k) {
      const auto& c = sys.cons[k];
      if (c.constant.sign() < 0) sigma[k] = -1;
      if (c.rel == Relation::kLessEq) {
        slack_col_[k] = slack_begin_ + slack_idx++;
        needs_art[k] = sigma[k] < 0;
      } else {
        slack_col_[k] = SIZE_MAX;
        needs_art[k] = true;
      }
      if (needs_art[k]) ++n_art;
    }
    t_.art_begin = slack_begin_ + n_ineq;
    t_.ncols = t_.art_begin + n_art;
    sigma_ = std::move(sigma);

    t_.rows.assign(sys.cons.size(), std::vector<Rational>(t_.ncols + 1));
    t_.basis.assign(sys.cons.size(), 0);
    std::size_t art_idx = 0;
    for (std::size_t k = 0; k < sys.cons.size(); ++k) {
      const auto& c = sys.cons[k];
      auto& row = t_.rows[k];
      Rational s(sigma_[k]);
      for (const auto& [var, coef] : c.coeffs) {
        std::size_t u = col_of_var_.at(var);
        row[u] += s * coef;
        row[u + 1] -= s * coef;
      }
      row[t_.ncols] = s * c.constant;
      if (c.rel == Relation::kLessEq) row[slack_col_[k]] = s;
      if (needs_art[k]) {
        art_col_[k] = t_.art_begin + art_idx++;
        row[art_col_[k]] = Rational(1);
        t_.basis[k] = art_col_[k];
      } else {
        art_col_[k] = SIZE_MAX;
        t_.basis[k] = slack_col_[k];
      }
    }
  }

  // Runs phase 1. Returns true when a feasible basis was reached; on false,
  // certificate() yields the Farkas witness.
  bool phase1() {
    t_.obj.assign(t_.ncols + 1, Rational(0));
    for (std::size_t j = t_.art_begin; j < t_.ncols; ++j) {
      t_.obj[j] = Rational(1);
    }
    for (std::size_t i = 0; i < t_.rows.size(); ++i) {
      if (t_.basis[i] >= t_.art_begin) {
        for (std::size_t j = 0; j <= t_.ncols; ++j) t_.obj[j] -= t_.rows[i][j];
      }
    }
    if (!t_.run(std::nullopt)) {
      throw std::logic_error("phase 1 objective is bounded; pivot loop broke");
    }
    if (t_.objective_value().sign() > 0) {
      extract_certificate();
      return false;
    }
    t_.drive_out_artificials();
    return true;
  }

  // Sets up minimization of sum(min_coeffs[v] * v) over the current basis.
  void set_objective(const std::map<std::string, Rational>& min_coeffs) {
    t_.obj.assign(t_.ncols + 1, Rational(0));
    for (const auto& [var, coef] : min_coeffs) {
      auto it = col_of_var_.find(var);
      if (it == col_of_var_.end()) {
        throw std::invalid_argument("objective references undeclared variable '" +
                                    var + "'");
      }
      t_.obj[it->second] += coef;
      t_.obj[it->second + 1] -= coef;
    }
    for (std::size_t i = 0; i < t_.rows.size(); ++i) {
      Rational f = t_.obj[t_.basis[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= t_.ncols; ++j) t_.obj[j] -= f * t_.rows[i][j];
    }
  }

  // Minimizes the current objective. Returns false when unbounded. When
  // stop_below is set, stops early once the objective value drops strictly
  // below it (cutoff_hit() reports this).
  bool phase2(const std::optional<Rational>& stop_below) {
    return t_.run(stop_below);
  }

  Rational objective_value() const { return t_.objective_value(); }
  bool cutoff_hit() const { return t_.cutoff_hit; }
  const std::vector<Rational>& certificate() const { return certificate_; }

  std::map<std::string, Rational> point() const {
    std::map<std::string, Rational> out;
    for (const auto& [var, ucol] : col_of_var_) {
      out[var] = t_.column_value(ucol) - t_.column_value(ucol + 1);
    }
    return out;
  }

 private:
  // At a positive phase-1 optimum the reduced costs encode a dual vector
  // whose row combination proves infeasibility. Inequality multipliers are
  // the slack reduced costs (nonnegative at optimum); equality multipliers
  // come from the artificial reduced costs, undoing the sign normalization.
  void extract_certificate() {
    certificate_.assign(sys_.cons.size(), Rational(0));
    for (std::size_t k = 0; k < sys_.cons.size(); ++k) {
      if (sys_.cons[k].rel == Relation::kLessEq) {
        certificate_[k] = t_.obj[slack_col_[k]];
      } else {
        certificate_[k] =
            Rational(sigma_[k]) * (t_.obj[art_col_[k]] - Rational(1));
      }
    }
  }

  const ConstraintSystem& sys_;
  std::map<std::string, std::size_t> col_of_var_;
  std::size_t n_struct_ = 0;
  std::size_t slack_begin_ = 0;
  std::vector<std::size_t> slack_col_;
  std::vector<std::size_t> art_col_;
  std::vector<int> sigma_;
  Tableau t_;
  std::vector<Rational> certificate_;
};

// Implication by multiplier synthesis over a fixed row set: expr <= bound is
// provable when multipliers, nonnegative on "<=" rows and free on "=" rows,
// recombine the rows into expr with total right-hand side at most `bound`.
// Over a feasible system that is exactly implication (LP duality); over an
// infeasible one the only possible error is a false "no". The solve runs in
// the dual dimension, one tableau row per variable and one column per
// constraint, so systems with many rows over few variables stay cheap and
// adding a constraint is a column append.
class DualImplies {
 public:
  explicit DualImplies(const ConstraintSystem& sys) {
    for (std::size_t i = 0; i < sys.vars.size(); ++i) {
      var_row_[sys.vars[i]] = i;
    }
    for (const auto& c : sys.cons) add_row(c);
  }

  void add_row(const LinearConstraint& c) {
    std::vector<Rational> col(var_row_.size());
    for (const auto& [var, coef] : c.coeffs) {
      auto it = var_row_.find(var);
      if (it == var_row_.end()) {
        throw std::invalid_argument("constraint references undeclared variable '" +
                                    var + "'");
      }
      col[it->second] = coef;
    }
    if (c.rel == Relation::kEqual) {
      std::vector<Rational> neg(col.size());
      for (std::size_t r = 0; r < col.size(); ++r) neg[r] = -col[r];
      cols_.push_back(std::move(col));
      cost_.push_back(c.constant);
      cols_.push_back(std::move(neg));
      cost_.push_back(-c.constant);
    } else {
      cols_.push_back(std::move(col));
      cost_.push_back(c.constant);
    }
  }

  bool implies_le(const std::map<std::string, Rational>& expr,
                  const Rational& bound) {
    const std::size_t n = var_row_.size();
    const std::size_t m = cols_.size();
    std::vector<Rational> e(n);
    for (const auto& [var, coef] : expr) {
      auto it = var_row_.find(var);
      if (it == var_row_.end()) {
        throw std::invalid_argument(
            "implication candidate references undeclared variable '" + var +
            "'");
      }
      e[it->second] = coef;
    }

    Tableau t;
    t.art_begin = m;
    t.ncols = m + n;
    t.rows.assign(n, std::vector<Rational>(t.ncols + 1));
    t.basis.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      Rational s(e[r].sign() < 0 ? -1 : 1);
      for (std::size_t k = 0; k < m; ++k) t.rows[r][k] = s * cols_[k][r];
      t.rows[r][m + r] = Rational(1);
      t.rows[r][t.ncols] = s * e[r];
      t.basis[r] = m + r;
    }

    t.obj.assign(t.ncols + 1, Rational(0));
    for (std::size_t j = t.art_begin; j < t.ncols; ++j) t.obj[j] = Rational(1);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t j = 0; j <= t.ncols; ++j) t.obj[j] -= t.rows[i][j];
    }
    if (!t.run(std::nullopt)) {
      throw std::logic_error("phase 1 objective is bounded; pivot loop broke");
    }
    if (t.objective_value().sign() > 0) return false;
    t.drive_out_artificials();

    t.obj.assign(t.ncols + 1, Rational(0));
    for (std::size_t k = 0; k < m; ++k) t.obj[k] = cost_[k];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      Rational f = t.obj[t.basis[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= t.ncols; ++j) t.obj[j] -= f * t.rows[i][j];
    }
    // A synthesis strictly cheaper than the bound is already a proof, so the
    // cutoff exits early; descent without a floor passes every bound.
    if (!t.run(std::optional<Rational>(bound))) return true;
    if (t.cutoff_hit) return true;
    return t.objective_value() <= bound;
  }

 private:
  std::map<std::string, std::size_t> var_row_;
  std::vector<std::vector<Rational>> cols_;
  std::vector<Rational> cost_;
};

struct SolveOut {
  LpStatus status = LpStatus::kInfeasible;
  bool cutoff_hit = false;
  Rational value;
  std::map<std::string, Rational> point;
  std::vector<Rational> certificate;
};

// Maximizes objective over sys; stops early once the value strictly exceeds
// cutoff_above, if given.
SolveOut solve_max(const ConstraintSystem& sys,
                   const std::map<std::string, Rational>& objective,
                   const std::optional<Rational>& cutoff_above) {
  Simplex s(sys);
  SolveOut out;
  if (!s.phase1()) {
    out.status = LpStatus::kInfeasible;
    out.certificate = s.certificate();
    return out;
  }
  std::map<std::string, Rational> min_coeffs;
  for (const auto& [var, coef] : objective) {
    if (!coef.is_zero()) min_coeffs[var] = -coef;
  }
  s.set_objective(min_coeffs);
  std::optional<Rational> stop_below;
  if (cutoff_above) stop_below = -*cutoff_above;
  if (!s.phase2(stop_below)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.cutoff_hit = s.cutoff_hit();
  out.value = -s.objective_value();
  out.point = s.point();
  return out;
}

}  // namespace

FeasibilityResult lp_feasible(const ConstraintSystem& sys) {
  Simplex s(sys);
  FeasibilityResult out;
  if (!s.phase1()) {
    out.feasible = false;
    out.certificate = s.certificate();
    return out;
  }
  out.feasible = true;
  out.point = s.point();
  return out;
}

OptimizeResult lp_maximize(const ConstraintSystem& sys,
                           const std::map<std::string, Rational>& objective) {
  SolveOut s = solve_max(sys, objective, std::nullopt);
  return OptimizeResult{s.status, s.value, std::move(s.point),
                        std::move(s.certificate)};
}

OptimizeResult lp_minimize(const ConstraintSystem& sys,
                           const std::map<std::string, Rational>& objective) {
  std::map<std::string, Rational> neg;
  for (const auto& [var, coef] : objective) neg[var] = -coef;
  SolveOut s = solve_max(sys, neg, std::nullopt);
  return OptimizeResult{s.status, -s.value, std::move(s.point),
                        std::move(s.certificate)};
}

namespace {

// Ensures every candidate variable is declared so the LP treats unmentioned
// ones as free.
ConstraintSystem with_vars_of(const ConstraintSystem& sys,
                              const LinearConstraint& candidate) {
  ConstraintSystem out = sys;
  for (const auto& [var, coef] : candidate.coeffs) {
    if (!coef.is_zero()) out.add_var(var);
  }
  return out;
}

bool implies_le(const ConstraintSystem& sys,
                const std::map<std::string, Rational>& expr,
                const Rational& bound) {
  SolveOut s = solve_max(sys, expr, bound);
  if (s.status == LpStatus::kInfeasible) return true;
  if (s.status == LpStatus::kUnbounded) return false;
  if (s.cutoff_hit) return false;
  return s.value <= bound;
}

}  // namespace

bool implies(const ConstraintSystem& sys, const LinearConstraint& candidate) {
  ConstraintSystem ext = with_vars_of(sys, candidate);
  if (!implies_le(ext, candidate.coeffs, candidate.constant)) return false;
  if (candidate.rel == Relation::kEqual) {
    std::map<std::string, Rational> neg;
    for (const auto& [var, coef] : candidate.coeffs) neg[var] = -coef;
    return implies_le(ext, neg, -candidate.constant);
  }
  return true;
}

struct ImplicationOracle::Impl {
  bool base_feasible = false;
  std::optional<DualImplies> dual;
};

ImplicationOracle::ImplicationOracle(ConstraintSystem sys)
    : impl_(std::make_unique<Impl>()) {
  impl_->base_feasible = lp_feasible(sys).feasible;
  if (impl_->base_feasible) impl_->dual.emplace(sys);
}

ImplicationOracle::~ImplicationOracle() = default;
ImplicationOracle::ImplicationOracle(ImplicationOracle&&) noexcept = default;
ImplicationOracle& ImplicationOracle::operator=(ImplicationOracle&&) noexcept =
    default;

bool ImplicationOracle::feasible() const { return impl_->base_feasible; }

bool ImplicationOracle::implies(const LinearConstraint& candidate) {
  if (!impl_->base_feasible) return true;
  if (!impl_->dual->implies_le(candidate.coeffs, candidate.constant)) {
    return false;
  }
  if (candidate.rel == Relation::kEqual) {
    std::map<std::string, Rational> neg;
    for (const auto& [var, coef] : candidate.coeffs) neg[var] = -coef;
    return impl_->dual->implies_le(neg, -candidate.constant);
  }
  return true;
}

void ImplicationOracle::add(const LinearConstraint& c) {
  if (impl_->dual) impl_->dual->add_row(c);
}

bool equivalent_systems(const ConstraintSystem& a, const ConstraintSystem& b) {
  ConstraintSystem ea = a;
  for (const auto& c : b.cons) {
    for (const auto& [var, coef] : c.coeffs) {
      if (!coef.is_zero()) ea.add_var(var);
    }
  }
  ConstraintSystem eb = b;
  for (const auto& c : a.cons) {
    for (const auto& [var, coef] : c.coeffs) {
      if (!coef.is_zero()) eb.add_var(var);
    }
  }
  ImplicationOracle oa(std::move(ea));
  ImplicationOracle ob(std::move(eb));
  return std::all_of(
             b.cons.begin(), b.cons.end(),
             [&](const LinearConstraint& c) { return oa.implies(c); }) &&
         std::all_of(a.cons.begin(), a.cons.end(), [&](const LinearConstraint& c) {
           return ob.implies(c);
         });
}

ConstraintSystem remove_redundant(const ConstraintSystem& sys) {
  if (!lp_feasible(sys).feasible) return sys;
  std::vector<bool> removed(sys.cons.size(), false);
  for (std::size_t i = 0; i < sys.cons.size(); ++i) {
    if (sys.cons[i].rel == Relation::kEqual) continue;
    ConstraintSystem rest;
    rest.vars = sys.vars;
    for (std::size_t j = 0; j < sys.cons.size(); ++j) {
      if (j != i && !removed[j]) rest.cons.push_back(sys.cons[j]);
    }
    if (implies(rest, sys.cons[i])) removed[i] = true;
  }
  ConstraintSystem out;
  out.vars = sys.vars;
  for (std::size_t j = 0; j < sys.cons.size(); ++j) {
    if (!removed[j]) out.cons.push_back(sys.cons[j]);
  }
  return out;
}

}  // namespace ncsd::exact
