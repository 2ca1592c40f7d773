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

#include "ncsd/fme.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "ncsd/lp.hpp"

namespace ncsd::exact {

namespace {

struct Row {
  LinearConstraint c;
  // Set on rows produced by the most recent combination step; only these
  // need an LP redundancy test, the rest were tested when they appeared.
  bool fresh = false;
};

LinearConstraint combine(const LinearConstraint& x, const Rational& cx,
                         const LinearConstraint& y, const Rational& cy,
                         Relation rel) {
  LinearConstraint out;
  out.rel = rel;
  for (const auto& [var, coef] : x.coeffs) out.coeffs[var] += cx * coef;
  for (const auto& [var, coef] : y.coeffs) out.coeffs[var] += cy * coef;
  out.constant = cx * x.constant + cy * y.constant;
  std::erase_if(out.coeffs,
                [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Deduplicates canonical rows and drops inequalities dominated by an
// identical left-hand side with a smaller right-hand side. A row that
// collides with a pre-existing duplicate is not fresh: it was certified when
// it first appeared.
void dedup_and_dominate(std::vector<Row>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return canonical_less(a.c, b.c);
  });
  std::vector<Row> out;
  for (auto& r : rows) {
    if (!out.empty() && out.back().c == r.c) {
      out.back().fresh = out.back().fresh && r.fresh;
      continue;
    }
    if (!out.empty() && out.back().c.rel == Relation::kLessEq &&
        r.c.rel == Relation::kLessEq && out.back().c.coeffs == r.c.coeffs) {
      // canonical_less orders equal supports by constant, so the kept row
      // already has the tighter bound.
      continue;
    }
    out.push_back(std::move(r));
  }
  rows = std::move(out);
}

// LP certification over the fresh rows: drops each one implied by the rows
// already accepted (survivors plus earlier-accepted fresh rows). Testing
// against the accepted set only, rather than the whole untested batch, keeps
// every removal justified by rows that reach the output and lets one oracle
// basis carry across the scan; the price is a possibly non-minimal result,
// which the caller's final remove_redundant() pass cleans up. Rows are
// already in canonical order, so the scan is deterministic.
void certify_fresh(std::vector<Row>& rows,
                   const std::vector<std::string>& vars) {
  ConstraintSystem kept;
  kept.vars = vars;
  for (const auto& r : rows) {
    if (!r.fresh) kept.cons.push_back(r.c);
  }
  ImplicationOracle oracle(std::move(kept));
  std::vector<Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    if (!r.fresh || r.c.rel == Relation::kEqual) {
      out.push_back(std::move(r));
      continue;
    }
    if (oracle.implies(r.c)) continue;
    r.fresh = false;
    oracle.add(r.c);
    out.push_back(std::move(r));
  }
  rows = std::move(out);
}

}  // namespace

ConstraintSystem fme_eliminate(const ConstraintSystem& sys,
                               const std::vector<std::string>& eliminate,
                               const FmeOptions& opts) {
  std::vector<std::string> vars = sys.vars;
  for (const auto& v : eliminate) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw std::invalid_argument("cannot eliminate undeclared variable '" +
                                  v + "'");
    }
  }

  std::vector<Row> rows;
  for (const auto& c : sys.cons) {
    LinearConstraint cc = canonicalize(c);
    if (cc.trivially_true()) continue;
    rows.push_back(Row{std::move(cc), false});
  }
  std::vector<std::string> pending = eliminate;

  // Substitution phase: consume every equality touching a pending variable
  // before any inequality combination. Substitution never grows the row
  // count, so doing all of it first keeps the combination phase small.
  // Combinations only ever produce inequalities, so no new equality can
  // appear once this sweep reaches a fixed point.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const std::string v = pending[k];
      std::size_t eq_idx = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].c.rel == Relation::kEqual &&
            !rows[i].c.coeff(v).is_zero()) {
          eq_idx = i;
          break;
        }
      }
      if (eq_idx == rows.size()) continue;
      const LinearConstraint eq = rows[eq_idx].c;
      const Rational a = eq.coeff(v);
      std::vector<Row> next;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == eq_idx) continue;
        const Rational b = rows[i].c.coeff(v);
        LinearConstraint nc =
            b.is_zero() ? rows[i].c
                        : combine(rows[i].c, Rational(1), eq, -b / a,
                                  rows[i].c.rel);
        nc = canonicalize(nc);
        if (nc.trivially_true()) continue;
        next.push_back(Row{std::move(nc), false});
      }
      rows = std::move(next);
      pending.erase(pending.begin() + k);
      std::erase(vars, v);
      dedup_and_dominate(rows);
      changed = true;
      break;
    }
  }

  // Combination phase, in the caller's order over what remains.
  const bool trace = std::getenv("NCSD_FME_TRACE") != nullptr;
  for (const auto& v : pending) {
    auto tstep = std::chrono::steady_clock::now();
    std::vector<Row> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int s = rows[i].c.coeff(v).sign();
      if (s == 0) {
        rows[i].fresh = false;
        next.push_back(std::move(rows[i]));
      } else if (s > 0) {
        pos.push_back(i);
      } else {
        neg.push_back(i);
      }
    }
    bool any_fresh = false;
    if (!pos.empty() && !neg.empty()) {
      for (std::size_t p : pos) {
        for (std::size_t n : neg) {
          LinearConstraint nc =
              combine(rows[p].c, -rows[n].c.coeff(v), rows[n].c,
                      rows[p].c.coeff(v), Relation::kLessEq);
          nc = canonicalize(nc);
          if (nc.trivially_true()) continue;
          next.push_back(Row{std::move(nc), true});
          any_fresh = true;
        }
      }
    }
    rows = std::move(next);

    std::erase(vars, v);
    dedup_and_dominate(rows);
    std::size_t deduped = rows.size();
    auto tmid = std::chrono::steady_clock::now();
    if (opts.certify && any_fresh) certify_fresh(rows, vars);
    if (trace) {
      auto tend = std::chrono::steady_clock::now();
      std::cerr << "[fme] " << v << " pos=" << pos.size()
                << " neg=" << neg.size() << " deduped=" << deduped
                << " kept=" << rows.size() << " vars=" << vars.size()
                << " combine="
                << std::chrono::duration<double>(tmid - tstep).count()
                << "s certify="
                << std::chrono::duration<double>(tend - tmid).count() << "s\n";
    }
  }

  ConstraintSystem out;
  out.vars = vars;
  for (auto& r : rows) out.cons.push_back(std::move(r.c));
  return out;
}

}  // namespace ncsd::exact
