// Copyright 2026 The abclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "abclab/mat.hpp"
#include "abclab/samplers.hpp"

namespace abclab {

inline constexpr double kLsTol = 1e-8;

/// Weighted linear fit of each parameter component on the summaries:
/// theta_i ~ alpha_i + sum_j B_ij s_j, weighted by the draw weights.
struct RegressionFit {
  Vec alpha_hat;     // p intercepts
  Mat b_hat;         // p x d coefficient matrix
  Vec residual_var;  // weighted residual variance per parameter component
};

/// Weighted least squares of parameters on (1, summaries). Normal equations
/// are solved via Cholesky on the centered cross-products with a ridge of
/// 1e-10 * trace; rank is checked on the unridged matrix first. Throws
/// TooFewDraws (needs at least d + 2) and RankDeficientDesign.
RegressionFit fit_regression(const std::vector<AcceptedDraw>& draws);

/// Beaumont-style correction: each draw's theta becomes
/// theta - B_hat (summary - s_obs); weights and summaries are unchanged.
std::vector<AcceptedDraw> adjust_draws(const std::vector<AcceptedDraw>& draws,
                                       const RegressionFit& fit,
                                       const SummaryVec& s_obs);

}  // namespace abclab
