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

#ifndef NCSD_FME_HPP_
#define NCSD_FME_HPP_

#include <string>
#include <vector>

#include "ncsd/linear.hpp"

namespace ncsd::exact {

struct FmeOptions {
  // Certify redundancy with sequential LP implication tests after each
  // combination step (substitution steps cannot grow the row count, so they
  // get only the cheap dedup/domination pass). Only rows produced by the
  // current step are tested; rows that merely survived it were certified
  // when they appeared and stay until the caller's final minimization.
  //
  // History-count prefilters (ancestor-set bounds) are deliberately absent:
  // they certify a row redundant by exhibiting a shorter derivation, and
  // interleaved geometric removal can delete the rows that derivation needs,
  // after which the bound discards facets of the true projection.
  bool certify = true;
};

// Projects `sys` onto the variables not listed in `eliminate`, exactly.
// Equalities are consumed first: any listed variable appearing in one is
// removed by Gaussian substitution, scanning in the given order until no
// more apply. The remaining variables are then eliminated in the given
// order by combining every positive/negative inequality pair. Output rows
// are canonical and deterministic for a given input; redundancy is removed
// per step when opts.certify is on, so the result is close to (but not
// guaranteed) minimal. Callers wanting a minimal independent set should
// follow with remove_redundant().
ConstraintSystem fme_eliminate(const ConstraintSystem& sys,
                               const std::vector<std::string>& eliminate,
                               const FmeOptions& opts = {});

}  // namespace ncsd::exact

#endif  // NCSD_FME_HPP_
