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

#ifndef NCSD_NCMODELS_HPP_
#define NCSD_NCMODELS_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncsd/linear.hpp"
#include "ncsd/scenario.hpp"

namespace ncsd::ncmodels {

using exact::ConstraintSystem;
using exact::LinearConstraint;
using exact::Rational;

// One deterministic joint outcome assignment to the three binary
// measurements, in row order (phi|M_phi, psi|M_psi, g_phi|M_d).
struct OnticVertex {
  std::array<int, 3> bits;
};

// The vertex list plus the three response vectors it induces:
// response[e][k] = vertices[k].bits[e].
struct VertexSet {
  std::vector<OnticVertex> vertices;
  std::array<std::vector<int>, 3> response;
  bool pruned = false;
};

// All 8 assignments in lexicographic order, or the 6-vertex reduction with
// (0,1,1) and (1,0,0) removed. The reduction is only valid under the
// assumption that the discrimination measurement is played optimally.
VertexSet enumerate_vertices(bool pruned);

enum class Mode { kSymmetric, kFull };

// Observable variable names, in canonical order.
const std::vector<std::string>& observable_names(Mode mode);

// The noncontextual-model constraint system: weight positivity, one
// normalization per preparation, the per-vertex noncontextuality equality
// mu_P_phi + mu_P_phibar = mu_P_psi + mu_P_psibar, and the dot-product
// definitions tying the observables to the weights. Labeling inequalities
// (eps <= c <= 1 - eps per parameter group) are included iff `labeling`.
// Variables: observables first, then weight blocks a, b, c, d for
// preparations P_phi, P_psi, P_phibar, P_psibar.
ConstraintSystem build_nc_system(Mode mode, bool labeling, bool pruned);

// Projects build_nc_system onto the observables: eliminates the weight
// blocks in the order d, c, b, a, then removes redundant rows and
// canonicalizes. `fix` pins observables to exact values before projection
// (e.g. eps = 0).
ConstraintSystem derive_nc_inequalities(
    Mode mode, bool labeling, bool pruned,
    const std::map<std::string, Rational>& fix = {});

// A distribution over ontic vertices.
struct EpistemicVector {
  std::vector<Rational> weights;
};

struct FeasibilityReport {
  bool feasible = false;
  // When feasible: one epistemic vector per preparation, in column order.
  std::array<EpistemicVector, 4> witness;
  // When infeasible: the violated reference inequalities, rendered over the
  // extracted observable values.
  std::vector<LinearConstraint> violated;
  std::vector<std::string> violated_text;
  // Variable order used to render `violated`.
  std::vector<std::string> violated_vars;
};

// Exact LP feasibility of a noncontextual model for the table: observables
// are fixed to the table entries (real entries converted to their exact
// binary values) and the LP runs over the 32 weights. On infeasibility the
// report lists which reference inequalities the table violates: the
// symmetric set when the table has the symmetries, the full set otherwise,
// each in its labeling-aware variant when the table satisfies the labeling
// convention. Throws std::runtime_error when the table fails validation.
FeasibilityReport nc_feasible(const scenario::DataTable& t, double tol = 1e-9);

// Sum over vertices of min(a, b). Both must be distributions on the same
// vertex count.
Rational classical_overlap(const EpistemicVector& a, const EpistemicVector& b);

// Best probability of guessing which of two equiprobable distributions
// produced a sampled vertex: 1 - overlap/2.
Rational optimal_guess_success(const EpistemicVector& a,
                               const EpistemicVector& b);

}  // namespace ncsd::ncmodels

#endif  // NCSD_NCMODELS_HPP_
