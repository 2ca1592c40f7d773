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

#include "ncsd/ncmodels.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncsd/fme.hpp"
#include "ncsd/golden.hpp"
#include "ncsd/lp.hpp"

namespace ncsd::ncmodels {

namespace {

constexpr std::array<const char*, 4> kBlocks = {"a", "b", "c", "d"};

std::string weight_name(int block, int k) {
  return std::string(kBlocks[block]) + std::to_string(k + 1);
}

// A table cell as an affine expression over the observables.
struct Cell {
  Rational constant;
  std::map<std::string, Rational> lin;
};

Cell cell(int constant, std::initializer_list<std::pair<const char*, int>> lin) {
  Cell out;
  out.constant = Rational(constant);
  for (const auto& [name, coef] : lin) out.lin[name] = Rational(coef);
  return out;
}

// Symmetric table: 3 effects x 4 preparations.
std::array<std::array<Cell, 4>, 3> symmetric_cells() {
  return {{
      {cell(1, {{"eps", -1}}), cell(0, {{"c", 1}}), cell(0, {{"eps", 1}}),
       cell(1, {{"c", -1}})},
      {cell(0, {{"c", 1}}), cell(1, {{"eps", -1}}), cell(1, {{"c", -1}}),
       cell(0, {{"eps", 1}})},
      {cell(0, {{"s", 1}}), cell(1, {{"s", -1}}), cell(1, {{"s", -1}}),
       cell(0, {{"s", 1}})},
  }};
}

// Symmetry-free table, first three columns; the fourth column is implied by
// the noncontextuality equalities and carries no extra definition.
std::array<std::array<Cell, 3>, 3> full_cells() {
  return {{
      {cell(1, {{"eps_phi", -1}}), cell(0, {{"c_psi", 1}}),
       cell(0, {{"eps_phibar", 1}})},
      {cell(0, {{"c_phi", 1}}), cell(1, {{"eps_psi", -1}}),
       cell(1, {{"c_phibar", -1}})},
      {cell(0, {{"s_phi", 1}}), cell(1, {{"s_psi", -1}}),
       cell(1, {{"s_phibar", -1}})},
  }};
}

// Definition row: sum of block weights on response-1 vertices minus the
// cell's observable part equals the cell's constant.
LinearConstraint definition_row(const VertexSet& vs, int effect, int block,
                                const Cell& cellv) {
  LinearConstraint con;
  con.rel = exact::Relation::kEqual;
  for (std::size_t k = 0; k < vs.vertices.size(); ++k) {
    if (vs.response[effect][k] == 1) {
      con.coeffs[weight_name(block, static_cast<int>(k))] = Rational(1);
    }
  }
  for (const auto& [name, coef] : cellv.lin) con.coeffs[name] -= coef;
  con.constant = cellv.constant;
  std::erase_if(con.coeffs,
                [](const auto& kv) { return kv.second.is_zero(); });
  return con;
}

void add_labeling(ConstraintSystem& sys, const std::string& c_name,
                  const std::string& eps_name) {
  sys.add(exact::make_le({{eps_name, Rational(1)}, {c_name, Rational(-1)}},
                         Rational(0)));
  sys.add(exact::make_le({{c_name, Rational(1)}, {eps_name, Rational(1)}},
                         Rational(1)));
}

bool full_labeling_holds(const scenario::FullParameters& p) {
  const Rational one(1);
  auto ok = [&](const Rational& eps, const Rational& c) {
    return eps <= c && c <= one - eps;
  };
  return ok(p.eps_phi, p.c_phi) && ok(p.eps_phibar, p.c_phibar) &&
         ok(p.eps_psi, p.c_psi);
}

std::map<std::string, Rational> full_point(const scenario::FullParameters& p) {
  return {{"s_phi", p.s_phi},         {"s_phibar", p.s_phibar},
          {"s_psi", p.s_psi},         {"c_phi", p.c_phi},
          {"c_phibar", p.c_phibar},   {"c_psi", p.c_psi},
          {"eps_phi", p.eps_phi},     {"eps_phibar", p.eps_phibar},
          {"eps_psi", p.eps_psi}};
}

void collect_violations(const ConstraintSystem& ref,
                        const std::map<std::string, Rational>& at,
                        FeasibilityReport& rep) {
  for (const auto& con : ref.cons) {
    if (!con.satisfied_by(at)) {
      rep.violated.push_back(con);
      rep.violated_text.push_back(exact::to_text(con, ref.vars));
    }
  }
  rep.violated_vars = ref.vars;
}

}  // namespace

VertexSet enumerate_vertices(bool pruned) {
  VertexSet out;
  out.pruned = pruned;
  for (int m = 0; m < 8; ++m) {
    OnticVertex v{{(m >> 2) & 1, (m >> 1) & 1, m & 1}};
    if (pruned && (v.bits == std::array<int, 3>{0, 1, 1} ||
                   v.bits == std::array<int, 3>{1, 0, 0})) {
      continue;
    }
    out.vertices.push_back(v);
  }
  for (int e = 0; e < 3; ++e) {
    for (const auto& v : out.vertices) out.response[e].push_back(v.bits[e]);
  }
  return out;
}

const std::vector<std::string>& observable_names(Mode mode) {
  static const std::vector<std::string> kSymmetric = {"s", "c", "eps"};
  static const std::vector<std::string> kFull = {
      "s_phi", "s_phibar", "s_psi",   "c_phi",      "c_phibar",
      "c_psi", "eps_phi",  "eps_phibar", "eps_psi"};
  return mode == Mode::kSymmetric ? kSymmetric : kFull;
}

ConstraintSystem build_nc_system(Mode mode, bool labeling, bool pruned) {
  const VertexSet vs = enumerate_vertices(pruned);
  const int n = static_cast<int>(vs.vertices.size());

  ConstraintSystem sys;
  for (const auto& name : observable_names(mode)) sys.add_var(name);
  for (int b = 0; b < 4; ++b) {
    for (int k = 0; k < n; ++k) sys.add_var(weight_name(b, k));
  }

  // Weight positivity.
  for (int b = 0; b < 4; ++b) {
    for (int k = 0; k < n; ++k) {
      sys.add(exact::make_ge({{weight_name(b, k), Rational(1)}}, Rational(0)));
    }
  }
  // Normalization per preparation.
  for (int b = 0; b < 4; ++b) {
    std::map<std::string, Rational> coeffs;
    for (int k = 0; k < n; ++k) coeffs[weight_name(b, k)] = Rational(1);
    sys.add(exact::make_eq(std::move(coeffs), Rational(1)));
  }
  // Preparation noncontextuality: mu_a + mu_c = mu_b + mu_d per vertex.
  for (int k = 0; k < n; ++k) {
    sys.add(exact::make_eq({{weight_name(0, k), Rational(1)},
                            {weight_name(2, k), Rational(1)},
                            {weight_name(1, k), Rational(-1)},
                            {weight_name(3, k), Rational(-1)}},
                           Rational(0)));
  }
  // Observable definitions.
  if (mode == Mode::kSymmetric) {
    const auto cells = symmetric_cells();
    for (int e = 0; e < 3; ++e) {
      for (int b = 0; b < 4; ++b) {
        sys.add(definition_row(vs, e, b, cells[e][b]));
      }
    }
    if (labeling) add_labeling(sys, "c", "eps");
  } else {
    const auto cells = full_cells();
    for (int e = 0; e < 3; ++e) {
      for (int b = 0; b < 3; ++b) {
        sys.add(definition_row(vs, e, b, cells[e][b]));
      }
    }
    if (labeling) {
      add_labeling(sys, "c_phi", "eps_phi");
      add_labeling(sys, "c_phibar", "eps_phibar");
      add_labeling(sys, "c_psi", "eps_psi");
    }
  }
  return sys;
}

ConstraintSystem derive_nc_inequalities(
    Mode mode, bool labeling, bool pruned,
    const std::map<std::string, Rational>& fix) {
  ConstraintSystem sys = build_nc_system(mode, labeling, pruned);
  for (const auto& [var, value] : fix) {
    if (!sys.has_var(var)) {
      throw std::invalid_argument("cannot fix unknown variable '" + var + "'");
    }
    sys = exact::substitute(sys, var, value);
  }
  const int n = static_cast<int>(enumerate_vertices(pruned).vertices.size());
  std::vector<std::string> elim;
  for (int b = 3; b >= 0; --b) {
    for (int k = 0; k < n; ++k) elim.push_back(weight_name(b, k));
  }
  ConstraintSystem proj = exact::fme_eliminate(sys, elim);
  proj = exact::canonicalize(proj);
  proj = exact::remove_redundant(proj);
  return exact::canonicalize(proj);
}

FeasibilityReport nc_feasible(const scenario::DataTable& t, double tol) {
  if (auto err = scenario::validate(t, tol)) {
    throw std::runtime_error(*err);
  }
  const scenario::FullParameters p = scenario::extract_full(t, tol);
  const auto at = full_point(p);

  ConstraintSystem sys = build_nc_system(Mode::kFull, false, false);
  for (const auto& [name, value] : at) sys = exact::substitute(sys, name, value);

  const auto lp = exact::lp_feasible(sys);
  FeasibilityReport rep;
  rep.feasible = lp.feasible;
  if (lp.feasible) {
    const int n = 8;
    for (int b = 0; b < 4; ++b) {
      rep.witness[b].weights.resize(n);
      for (int k = 0; k < n; ++k) {
        rep.witness[b].weights[k] = lp.point.at(weight_name(b, k));
      }
    }
    return rep;
  }

  // Violation report. Prefer the symmetric reference when the table has the
  // symmetries; fall back to the full set when the symmetric designated
  // values alone do not witness the violation (possible for real tables that
  // are only symmetric within tol).
  bool symmetric_ok = true;
  scenario::SymmetricSummary y;
  try {
    y = scenario::extract_symmetric(t, tol);
  } catch (const std::exception&) {
    symmetric_ok = false;
  }
  if (symmetric_ok) {
    const ConstraintSystem& ref = scenario::check_labeling(y)
                                      ? golden_symmetric_labeled()
                                      : golden_symmetric_unlabeled();
    collect_violations(ref, {{"s", y.s}, {"c", y.c}, {"eps", y.eps}}, rep);
    if (!rep.violated.empty()) return rep;
  }
  const ConstraintSystem& ref = full_labeling_holds(p)
                                    ? golden_full_labeled()
                                    : golden_full_unlabeled();
  collect_violations(ref, at, rep);
  return rep;
}

Rational classical_overlap(const EpistemicVector& a,
                           const EpistemicVector& b) {
  if (a.weights.size() != b.weights.size()) {
    throw std::invalid_argument(
        "overlap requires distributions on the same vertex set");
  }
  Rational acc(0);
  for (std::size_t k = 0; k < a.weights.size(); ++k) {
    acc += exact::min(a.weights[k], b.weights[k]);
  }
  return acc;
}

Rational optimal_guess_success(const EpistemicVector& a,
                               const EpistemicVector& b) {
  return Rational(1) - classical_overlap(a, b) / Rational(2);
}

}  // namespace ncsd::ncmodels
