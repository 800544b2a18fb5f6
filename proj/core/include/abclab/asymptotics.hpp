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
#include "abclab/metrics.hpp"
#include "abclab/models.hpp"

namespace abclab {

/// Bandwidth regime classified by c = lim sqrt(n) * eps_n.
enum class Regime {
  kFaster,    // sqrt(n) eps -> 0: kernel washes out
  kBoundary,  // sqrt(n) eps -> c > 0
  kSlower,    // sqrt(n) eps -> infinity: bandwidth dominates
};

/// Closed-form limit of the ABC posterior of the rescaled parameter
/// t = sqrt(n) (theta - theta0), and of the sampling distribution of its
/// posterior mean under repeated data.
///
/// With B = A + c^2 Sigma (Sigma = identity at c = 0):
///   mean_map          = (D0' B^-1 D0)^-1 D0' B^-1      (p x d)
///   cov_t             = (D0' B^-1 D0)^-1               (p x p)
///   mean_sampling_cov = mean_map A mean_map'           (p x p)
/// The posterior mean of t is mean_map times the rescaled observation, whose
/// limit law is N(0, A); at c = 0 mean_sampling_cov equals cov_t = I^-1 and
/// for c > 0 the posterior variance is the larger of the two.
struct AsymptoticPrediction {
  Regime regime = Regime::kFaster;
  double c = 0.0;
  Mat mean_map;
  Mat cov_t;
  Mat mean_sampling_cov;
  Mat info;         // I = D0' A^-1 D0
  Mat info_kernel;  // I~ = D0' (A + c^2 Sigma)^-1 D0; equals info at c = 0
};

/// Jacobian of the binding function at theta0 by central differences with
/// step 1e-5 * max(1, |theta0_j|). Throws NonFiniteBinding.
Mat numeric_D0(const SyntheticModel& model, const ParamVec& theta0);

/// Limit predictions for the given regime. c = 0 is kernel-independent; for
/// c > 0 only the gaussian kernel admits a closed form (the kernel noise is
/// then Gaussian with covariance Sigma = Gamma^-1), so a uniform kernel with
/// c > 0 throws NoClosedForm and callers fall back to the numeric oracle.
AsymptoticPrediction predict_posterior(const Mat& d0, const Mat& a0,
                                       const KernelSpec& kernel, double c);

/// The p x d projection P = D0' A0^-1. Replacing the summary s with P s (and
/// the model noise with P A0 P') leaves the c = 0 posterior-mean sampling
/// variance at I^-1.
Mat project_summaries(const Mat& d0, const Mat& a0);

/// Normalised ABC posterior density on a 1-d grid.
struct DensityTable {
  std::vector<double> theta;
  std::vector<double> density;

  double mass_between(double lo, double hi) const;
  double cdf(double x) const;
  double mean() const;
  double variance() const;
  double sd() const;
};

std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Exact ABC posterior for p = d = 1 models with the Gaussian summary law
/// N(b(theta), A(theta)/n): the kernel convolution integrates in closed form
/// (difference of normal CDFs for the uniform kernel, variance-inflated
/// normal density for the gaussian kernel) and the grid is normalised by the
/// trapezoid rule. Throws GridTooCoarse when adjacent densities jump by more
/// than 10x anywhere mass is non-negligible.
DensityTable oracle_abc_posterior_1d(const SyntheticModel& model,
                                     const ObservedData& obs,
                                     const KernelSpec& kernel, double eps,
                                     const std::vector<double>& theta_grid);

/// Posterior mass of (theta0 - delta, theta0 + delta) by trapezoid
/// integration with partial end cells.
double concentration_mass(const DensityTable& table, double theta0,
                          double delta);

}  // namespace abclab
