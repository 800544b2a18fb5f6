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

#include "abclab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abclab/errors.hpp"

namespace abclab {

DistanceSpec DistanceSpec::mahalanobis(Mat gamma) {
  cholesky(gamma);  // SPD check up front
  DistanceSpec spec;
  spec.kind = DistanceKind::kMahalanobis;
  spec.gamma = std::move(gamma);
  return spec;
}

double distance(const DistanceSpec& spec, const SummaryVec& x,
                const SummaryVec& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("distance arguments " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  }
  if (spec.kind == DistanceKind::kEuclidean) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = x[i] - y[i];
      s += r * r;
    }
    return std::sqrt(s);
  }
  const Mat& g = *spec.gamma;
  if (g.rows != x.size()) {
    throw DimensionMismatch("distance weight matrix vs summary dimension");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ri = x[i] - y[i];
    double row = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) row += g(i, j) * (x[j] - y[j]);
    s += ri * row;
  }
  return std::sqrt(s);
}

double kernel_weight_from_distance(KernelKind kind, double dist, double eps) {
  if (eps <= 0.0) throw InvalidArgument("kernel bandwidth must be positive");
  if (kind == KernelKind::kUniform) {
    return dist < eps ? 1.0 : 0.0;
  }
  const double r = dist / eps;
  return std::exp(-0.5 * r * r);
}

double kernel_weight(const KernelSpec& spec, const SummaryVec& x, double eps) {
  const SummaryVec origin(x.size(), 0.0);
  return kernel_weight_from_distance(spec.kind, distance(spec.distance, x, origin),
                                     eps);
}

Mat kernel_sigma(const KernelSpec& spec, std::size_t d) {
  if (spec.distance.kind == DistanceKind::kEuclidean) {
    return Mat::identity(d);
  }
  const Mat& g = *spec.distance.gamma;
  if (g.rows != d) {
    throw DimensionMismatch("distance weight matrix vs summary dimension");
  }
  return inverse_spd(g);
}

BandwidthSchedule BandwidthSchedule::explicit_schedule(double a, double eta) {
  if (a <= 0.0 || eta <= 0.0 || eta > 1.0) {
    throw InvalidArgument("explicit schedule needs a > 0 and eta in (0, 1]");
  }
  BandwidthSchedule s;
  s.mode = BandwidthMode::kExplicit;
  s.a = a;
  s.eta = eta;
  return s;
}

BandwidthSchedule BandwidthSchedule::quantile(double accept_fraction) {
  if (accept_fraction <= 0.0 || accept_fraction > 1.0) {
    throw InvalidArgument("accept_fraction must be in (0, 1]");
  }
  BandwidthSchedule s;
  s.mode = BandwidthMode::kQuantile;
  s.accept_fraction = accept_fraction;
  return s;
}

double bandwidth(const BandwidthSchedule& sched, std::int64_t n) {
  if (sched.mode == BandwidthMode::kQuantile) {
    throw QuantileModeRequiresDistances(
        "quantile schedule has no bandwidth until distances are realized");
  }
  if (n < 1) throw InvalidArgument("bandwidth needs n >= 1");
  return sched.a * std::pow(static_cast<double>(n), -sched.eta);
}

double quantile_bandwidth(const BandwidthSchedule& sched,
                          const std::vector<double>& distances) {
  if (sched.mode != BandwidthMode::kQuantile) {
    throw InvalidArgument("quantile_bandwidth called on explicit schedule");
  }
  if (distances.empty()) {
    throw InvalidArgument("quantile_bandwidth needs at least one distance");
  }
  std::vector<double> sorted = distances;
  const std::size_t k = std::min<std::size_t>(
      sorted.size(),
      static_cast<std::size_t>(
          std::ceil(sched.accept_fraction * static_cast<double>(sorted.size()))));
  const std::size_t idx = k == 0 ? 0 : k - 1;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(idx),
                   sorted.end());
  return sorted[idx];
}

DistanceSpec estimate_variance_distance(const SyntheticModel& model,
                                        std::int64_t n, RngStream& rng,
                                        bool full_cov,
                                        std::size_t pilot_size) {
  const Vec theta = model.prior.midpoint();
  const std::size_t d = model.d;
  std::vector<SummaryVec> sims(pilot_size);
  Vec mean(d, 0.0);
  for (std::size_t i = 0; i < pilot_size; ++i) {
    RngStream draw = rng.child(0x9170, i);
    sims[i] = model.simulate(theta, n, draw);
    for (std::size_t j = 0; j < d; ++j) mean[j] += sims[i][j];
  }
  for (double& v : mean) v /= static_cast<double>(pilot_size);

  Mat cov(d, d);
  for (const auto& s : sims) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        cov(i, j) += (s[i] - mean[i]) * (s[j] - mean[j]);
  }
  for (double& v : cov.a) v /= static_cast<double>(pilot_size - 1);

  if (full_cov) {
    return DistanceSpec::mahalanobis(inverse_spd(cov));
  }
  Vec inv_var(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (cov(j, j) <= 0.0) {
      throw NotPositiveDefinite("pilot variance of summary " +
                                std::to_string(j) + " is zero");
    }
    inv_var[j] = 1.0 / cov(j, j);
  }
  return DistanceSpec::mahalanobis(Mat::diag(inv_var));
}

}  // namespace abclab
