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

#ifndef NCSD_SCENARIO_HPP_
#define NCSD_SCENARIO_HPP_

#include <array>
#include <optional>
#include <string>

#include "ncsd/rational.hpp"

namespace ncsd::scenario {

using exact::Rational;

inline constexpr std::array<const char*, 4> kPreparationNames = {
    "P_phi", "P_psi", "P_phibar", "P_psibar"};
inline constexpr std::array<const char*, 3> kEffectNames = {
    "phi|M_phi", "psi|M_psi", "g_phi|M_d"};

enum class TableKind { kExact, kReal };

// 3 effects x 4 preparations of outcome probabilities. A table carries
// either exact rational entries or real entries, never a mix: the exact kind
// feeds the derivation pipeline, the real kind carries quantum/experimental
// statistics with a tolerance.
struct DataTable {
  std::array<std::string, 4> preparations = {
      kPreparationNames[0], kPreparationNames[1], kPreparationNames[2],
      kPreparationNames[3]};
  std::array<std::string, 3> effects = {kEffectNames[0], kEffectNames[1],
                                        kEffectNames[2]};
  TableKind kind = TableKind::kExact;
  std::array<std::array<Rational, 4>, 3> exact{};
  std::array<std::array<double, 4>, 3> real{};
  // Asserts that each row satisfies
  //   p(.|P_phi) + p(.|P_phibar) = p(.|P_psi) + p(.|P_psibar),
  // the operational equivalence of the half/half mixtures.
  bool equivalence_declared = true;

  double entry(int row, int col) const {
    return kind == TableKind::kExact ? exact[row][col].to_double()
                                     : real[row][col];
  }
  // Exact view: real entries are converted to the exact binary value of the
  // stored double, so downstream arithmetic has no hidden rounding step.
  Rational entry_exact(int row, int col) const {
    return kind == TableKind::kExact ? exact[row][col]
                                     : Rational::from_double(real[row][col]);
  }
};

// Checks entry ranges and, when declared, the row-wise equivalence identity
// (exactly for rational tables, within tol for real ones). Returns an error
// description, or nullopt when the table is valid.
std::optional<std::string> validate(const DataTable& t, double tol = 1e-9);

// Symmetric scenario summary: success rate s, confusability c, noise eps.
struct SymmetricSummary {
  Rational s;
  Rational c;
  Rational eps;
};

// The nine free parameters of the symmetry-free table; the fourth column is
// derived from these.
struct FullParameters {
  Rational s_phi, s_phibar, s_psi;
  Rational c_phi, c_phibar, c_psi;
  Rational eps_phi, eps_phibar, eps_psi;
};

inline constexpr std::array<const char*, 9> kFullParameterNames = {
    "s_phi", "s_phibar", "s_psi",   "c_phi",      "c_phibar",
    "c_psi", "eps_phi",  "eps_phibar", "eps_psi"};

// Builds the symmetric table
//   phi|M_phi : (1-eps, c,     eps,   1-c)
//   psi|M_psi : (c,     1-eps, 1-c,   eps)
//   g_phi|M_d : (s,     1-s,   1-s,   s)
// Throws std::invalid_argument naming the offending field when a summary
// value is outside [0,1].
DataTable build_table_symmetric(const SymmetricSummary& summary);
DataTable build_table_symmetric_real(double s, double c, double eps);

// Builds the symmetry-free table from its nine parameters; the fourth column
// is derived. Throws std::invalid_argument naming the parameter or derived
// expression that leaves [0,1].
DataTable build_table_full(const FullParameters& p);

// Reads (s, c, eps) from the designated cells "p(g_phi|M_d, P_phi)",
// "p(phi|M_phi, P_psi)", "1 - p(psi|M_psi, P_psi)" and verifies that every
// remaining cell matches its symmetric expression: exactly for rational
// tables, within tol for real ones. Throws std::runtime_error describing the
// worst-violated equality otherwise. Real entries are returned as the exact
// binary values of the stored doubles.
SymmetricSummary extract_symmetric(const DataTable& t, double tol = 1e-9);

// Reads the nine parameters from their designated cells (first three
// columns). The fourth column is validated by `validate`, not re-read.
FullParameters extract_full(const DataTable& t, double tol = 1e-9);

// Labeling convention: eps <= c <= 1 - eps.
bool check_labeling(const SymmetricSummary& summary);

// JSON: {"preparations":[4 names], "effects":[3 names],
//        "rows":[[4 entries] x 3], "equivalence": true}.
// Exact tables write every entry as a "p/q" string; real tables write
// numbers. Parsing rejects mixed entry kinds.
std::string to_json(const DataTable& t);
DataTable table_from_json(const std::string& json_text);

}  // namespace ncsd::scenario

#endif  // NCSD_SCENARIO_HPP_
