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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abclab/mat.hpp"

namespace abclab {

/// Axis-aligned box prior with per-coordinate bounds.
struct BoxPrior {
  Vec lo, hi;

  std::size_t dim() const { return lo.size(); }
  bool contains(const Vec& theta) const;
  double volume() const;
  /// Uniform density: 1/volume inside the box, 0 outside.
  double density(const Vec& theta) const;
  Vec midpoint() const;
  Vec sample(RngStream& rng) const;
};

using BindingFn = std::function<Vec(const Vec&)>;
using CovFn = std::function<Mat(const Vec&)>;
using RawSimulator =
    std::function<SummaryVec(const ParamVec&, std::int64_t, RngStream&)>;

/// A synthetic data-generating model: summary simulator at sample size n,
/// binding function b(theta) (the large-n limit of the summary), and the
/// covariance A(theta) of the sqrt(n)-scaled summary noise.
///
/// Summaries are simulated directly from the limit regime,
///   s = b(theta) + chol(A(theta)) z / sqrt(n),
/// which is what the large-n analysis depends on and makes n = 1e6 runs
/// cheap. Models that mimic a wrong modelling assumption carry a separate
/// observed-data law (b*, A*) used only when synthesising observed data.
/// raw_simulate, when present, generates n actual data points and is used by
/// tests to validate the shortcut.
struct SyntheticModel {
  std::string name;
  std::size_t p = 1;
  std::size_t d = 1;
  BoxPrior prior;
  BindingFn binding;
  CovFn noise_cov;
  ParamVec true_theta;
  bool identifiable = true;
  bool misspecified = false;

  BindingFn observed_binding;  // defaults to binding
  CovFn observed_cov;          // defaults to noise_cov
  RawSimulator raw_simulate;
  RawSimulator raw_simulate_observed;

  // set for models whose A does not depend on theta; skips a per-draw factorization
  std::optional<Mat> const_noise_chol;
  std::optional<Mat> const_observed_chol;

  SummaryVec simulate(const ParamVec& theta, std::int64_t n,
                      RngStream& rng) const;
  SummaryVec simulate_observed(const ParamVec& theta, std::int64_t n,
                               RngStream& rng) const;
};

/// One observed summary, reproducible from (source_model, n, data_seed).
struct ObservedData {
  SummaryVec s_obs;
  std::int64_t n = 0;
  std::string source_model;
  std::uint64_t data_seed = 0;
};

/// Simulates observed data at the model's true parameter value (using the
/// observed-data law, which differs from the assumed law only for
/// misspecified models).
ObservedData make_observed(const SyntheticModel& model, std::int64_t n,
                           std::uint64_t data_seed);

/// 1-d model with b(theta) = slope*theta, A = 1, prior Uniform(-10, 10).
/// Throws ZeroSlope when slope == 0 (the binding would not identify theta).
SyntheticModel make_linear_gaussian(double slope);

/// b(theta) = (theta-1)^2 on prior Uniform(-2, 4): b(0) = b(2), so the ABC
/// posterior splits between two modes.
SyntheticModel make_bimodal_binding();

/// Piecewise binding, flat at 0 on [0, 1]: a whole interval of parameters is
/// indistinguishable from theta0 = 0.5.
SyntheticModel make_flat_binding();

/// Gaussian data with mean theta; the assumed model uses variance
/// theta^2 + 1 while the data-generating process has theta^2 + 2. Summaries
/// are (sample mean, sample variance), so the observed summary converges to
/// a point off the assumed binding curve. Returns (assumed, true_dgp); the
/// assumed model carries the true-dgp observed-data law.
std::pair<SyntheticModel, SyntheticModel> make_misspecified_pair();

/// p = 1 model with d >= 2 summaries b(theta) = (theta, theta/2, ...,
/// theta/d) and deliberately ill-scaled noise A = diag(1, 4, ..., d^2).
SyntheticModel make_multi_summary(std::size_t d);

/// Registry lookup: "linear", "bimodal", "flat", "misspec", "misspec-truth",
/// "multi:<d>". Throws UnknownModel.
SyntheticModel model_by_name(const std::string& name);

std::vector<std::string> model_names();

}  // namespace abclab
