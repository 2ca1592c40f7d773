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

#include "ncsd/golden.hpp"

namespace ncsd::ncmodels {

namespace {

exact::ConstraintSystem parse(const char* text) {
  return exact::canonicalize(exact::system_from_text(text));
}

}  // namespace

const exact::ConstraintSystem& golden_full_labeled() {
  static const exact::ConstraintSystem sys = parse(R"(
vars: s_phi s_phibar s_psi c_phi c_phibar c_psi eps_phi eps_phibar eps_psi
-s_phi <= 0
s_phi <= 1
-s_phibar <= 0
s_phibar <= 1
-s_psi <= 0
s_psi <= 1
-eps_phi <= 0
eps_phi - c_phi <= 0
c_phi + eps_phi <= 1
-eps_phibar <= 0
eps_phibar - c_phibar <= 0
c_phibar + eps_phibar <= 1
-eps_psi <= 0
eps_psi - c_psi <= 0
c_psi + eps_psi <= 1
-s_phi + s_phibar - s_psi <= 0
s_phi - s_phibar + s_psi <= 1
-c_phi + c_phibar - eps_psi <= 0
-c_psi - s_phibar + s_psi - eps_phi <= 0
-c_psi + s_phibar - s_psi - eps_phi <= 0
c_psi - s_phi - s_psi - eps_phibar <= 0
-c_phi - s_phibar + s_psi - eps_psi <= 0
c_phibar - s_phi - s_psi - eps_psi <= 0
-c_phi + s_phibar - s_psi - eps_psi <= 0
c_phibar - c_psi - eps_phi - eps_psi <= 0
-c_phi + c_psi - eps_phibar - eps_psi <= 0
c_psi + s_phi + s_psi - eps_phibar <= 2
c_phibar + s_phi + s_psi - eps_psi <= 2
c_phi - c_phibar - c_psi - eps_phi + eps_phibar + eps_psi <= 0
c_phi - c_phibar + c_psi + eps_phi - eps_phibar + eps_psi <= 1
)");
  return sys;
}

const exact::ConstraintSystem& golden_symmetric_labeled() {
  static const exact::ConstraintSystem sys = parse(R"(
vars: s c eps
2*s + c - eps <= 2
-s <= 0
s <= 1
-eps <= 0
eps - c <= 0
c + eps <= 1
)");
  return sys;
}

// Snapshot of derive_nc_inequalities(kFull, labeling=false, pruned=false),
// locked by regression tests.
const exact::ConstraintSystem& golden_full_unlabeled() {
  static const exact::ConstraintSystem sys = parse(R"(
vars: s_phi s_phibar s_psi c_phi c_phibar c_psi eps_phi eps_phibar eps_psi
)");
  return sys;
}

// Snapshot of derive_nc_inequalities(kSymmetric, labeling=false,
// pruned=false), locked by regression tests.
const exact::ConstraintSystem& golden_symmetric_unlabeled() {
  static const exact::ConstraintSystem sys = parse(R"(
vars: s c eps
)");
  return sys;
}

}  // namespace ncsd::ncmodels
