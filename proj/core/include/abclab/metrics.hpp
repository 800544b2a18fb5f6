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
#include <optional>
#include <vector>

#include "abclab/mat.hpp"
#include "abclab/models.hpp"

namespace abclab {

enum class DistanceKind { kEuclidean, kMahalanobis };

/// Distance between summary vectors: ||x - y|| with ||u||^2 = u' Gamma u.
/// Euclidean is Gamma = identity (and carries no matrix).
struct DistanceSpec {
  DistanceKind kind = DistanceKind::kEuclidean;
  std::optional<Mat> gamma;  // SPD weight matrix, Mahalanobis only

  static DistanceSpec euclidean() { return {}; }
  static DistanceSpec mahalanobis(Mat gamma);
};

double distance(const DistanceSpec& spec, const SummaryVec& x,
                const SummaryVec& y);

enum class KernelKind { kUniform, kGaussian };

/// Acceptance kernel K(x): uniform is 1{||x|| < 1}, gaussian is
/// exp(-||x||^2 / 2), both under the spec's distance.
struct KernelSpec {
  KernelKind kind = KernelKind::kUniform;
  DistanceSpec distance;
};

/// K(x / eps) given dist = ||x|| under the kernel's distance.
double kernel_weight_from_distance(KernelKind kind, double dist, double eps);

/// K(x / eps) for a summary discrepancy x.
double kernel_weight(const KernelSpec& spec, const SummaryVec& x, double eps);

/// Gaussian-kernel covariance implied by the distance weight: Sigma =
/// Gamma^-1 (identity for Euclidean). d is the summary dimension.
Mat kernel_sigma(const KernelSpec& spec, std::size_t d);

enum class BandwidthMode { kExplicit, kQuantile };

/// Bandwidth rule: either an explicit schedule eps_n = a * n^(-eta) or a
/// quantile rule where eps is the accept_fraction-quantile of realized
/// distances in a sampler round.
struct BandwidthSchedule {
  BandwidthMode mode = BandwidthMode::kExplicit;
  double a = 1.0;                // scale, explicit mode
  double eta = 0.5;              // exponent in (0, 1], explicit mode
  double accept_fraction = 0.1;  // quantile mode, in (0, 1)

  static BandwidthSchedule explicit_schedule(double a, double eta);
  static BandwidthSchedule quantile(double accept_fraction);
};

/// eps_n = a * n^(-eta). Throws QuantileModeRequiresDistances in quantile
/// mode: there is no bandwidth until distances have been realized.
double bandwidth(const BandwidthSchedule& sched, std::int64_t n);

/// accept_fraction-quantile of realized distances (k-th smallest with
/// k = ceil(q * N)).
double quantile_bandwidth(const BandwidthSchedule& sched,
                          const std::vector<double>& distances);

/// Distance weighted by pilot-simulation variance at the prior midpoint:
/// Gamma = diag(1/var(s_j)), or the full inverse sample covariance when
/// full_cov is set. pilot_size draws at sample size n.
DistanceSpec estimate_variance_distance(const SyntheticModel& model,
                                        std::int64_t n, RngStream& rng,
                                        bool full_cov = false,
                                        std::size_t pilot_size = 1000);

}  // namespace abclab
