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

#ifndef NCSD_GOLDEN_HPP_
#define NCSD_GOLDEN_HPP_

#include "ncsd/linear.hpp"

namespace ncsd::ncmodels {

// Canonical reference inequality sets. The labeled sets are independent
// transcriptions of the published lists (the ground truth the derivation is
// checked against); the unlabeled sets are snapshots of the labeling-free
// derivation, locked by regression tests. All are canonicalized.

// Full 9-parameter set with the labeling convention; the `derive
// --golden appendixD` comparison target.
const exact::ConstraintSystem& golden_full_labeled();

// Symmetric (s, c, eps) set with labeling: the headline bound
// 2s + c - eps <= 2 plus parameter bounds.
const exact::ConstraintSystem& golden_symmetric_labeled();

// Labeling-free snapshots used for violation reporting.
const exact::ConstraintSystem& golden_full_unlabeled();
const exact::ConstraintSystem& golden_symmetric_unlabeled();

}  // namespace ncsd::ncmodels

#endif  // NCSD_GOLDEN_HPP_
