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

#include "abclab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abclab/errors.hpp"

namespace abclab {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

void check_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw NonFiniteBinding("binding function evaluated non-finite");
    }
  }
}

}  // namespace

Mat numeric_D0(const SyntheticModel& model, const ParamVec& theta0) {
  const std::size_t p = theta0.size();
  const SummaryVec probe = model.binding(theta0);
  check_finite(probe);
  const std::size_t d = probe.size();
  Mat d0(d, p);
  for (std::size_t j = 0; j < p; ++j) {
    const double h = 1e-5 * std::max(1.0, std::abs(theta0[j]));
    ParamVec hi = theta0, lo = theta0;
    hi[j] += h;
    lo[j] -= h;
    const SummaryVec bhi = model.binding(hi);
    const SummaryVec blo = model.binding(lo);
    check_finite(bhi);
    check_finite(blo);
    for (std::size_t i = 0; i < d; ++i) {
      d0(i, j) = (bhi[i] - blo[i]) / (2.0 * h);
    }
  }
  return d0;
}

AsymptoticPrediction predict_posterior(const Mat& d0, const Mat& a0,
                                       const KernelSpec& kernel, double c) {
  if (c < 0.0) throw InvalidArgument("c must be nonnegative");
  if (!a0.square() || a0.rows != d0.rows) {
    throw DimensionMismatch("A must be d x d matching D0");
  }
  if (c > 0.0 && kernel.kind == KernelKind::kUniform) {
    throw NoClosedForm(
        "uniform kernel with c > 0 has no closed-form limit; use the numeric "
        "oracle");
  }

  const std::size_t d = d0.rows;
  const std::size_t p = d0.cols;
  const Mat a_inv = inverse_spd(a0);
  const Mat d0t = transpose(d0);

  AsymptoticPrediction pred;
  pred.c = c;
  pred.regime = c == 0.0 ? Regime::kFaster : Regime::kBoundary;
  pred.info = d0t * (a_inv * d0);
  try {
    cholesky(pred.info);
  } catch (const NotPositiveDefinite&) {
    throw RankDeficient("D0 does not have full column rank p");
  }

  Mat b = a0;
  if (c > 0.0) {
    b = a0 + scaled(kernel_sigma(kernel, d), c * c);
  }
  const Mat b_inv = inverse_spd(b);
  pred.info_kernel = d0t * (b_inv * d0);
  pred.cov_t = inverse_spd(pred.info_kernel);
  pred.mean_map = pred.cov_t * (d0t * b_inv);  // p x d
  pred.mean_sampling_cov = pred.mean_map * (a0 * transpose(pred.mean_map));
  (void)p;
  return pred;
}

Mat project_summaries(const Mat& d0, const Mat& a0) {
  if (!a0.square() || a0.rows != d0.rows) {
    throw DimensionMismatch("A must be d x d matching D0");
  }
  const Mat proj = transpose(d0) * inverse_spd(a0);
  // full rank iff P D0 = I is invertible
  const Mat pd = proj * d0;
  try {
    Mat sym = scaled(pd + transpose(pd), 0.5);
    cholesky(sym);
  } catch (const NotPositiveDefinite&) {
    throw RankDeficient("projected information matrix is singular");
  }
  return proj;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw InvalidArgument("linspace needs count >= 2");
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double DensityTable::mass_between(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    const double a = theta[i], b = theta[i + 1];
    if (b <= lo || a >= hi) continue;
    const double cl = std::max(a, lo), cr = std::min(b, hi);
    // linear interpolation of the density at the clipped cell ends
    const double fa = density[i], fb = density[i + 1];
    const double w = b - a;
    const double dl = w > 0.0 ? fa + (fb - fa) * (cl - a) / w : fa;
    const double dr = w > 0.0 ? fa + (fb - fa) * (cr - a) / w : fb;
    mass += 0.5 * (dl + dr) * (cr - cl);
  }
  return mass;
}

double DensityTable::cdf(double x) const {
  if (theta.empty()) return 0.0;
  if (x <= theta.front()) return 0.0;
  if (x >= theta.back()) return 1.0;
  return mass_between(theta.front(), x);
}

double DensityTable::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    const double h = theta[i + 1] - theta[i];
    m += 0.5 * h *
         (theta[i] * density[i] + theta[i + 1] * density[i + 1]);
  }
  return m;
}

double DensityTable::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    const double h = theta[i + 1] - theta[i];
    const double da = (theta[i] - m) * (theta[i] - m) * density[i];
    const double db = (theta[i + 1] - m) * (theta[i + 1] - m) * density[i + 1];
    v += 0.5 * h * (da + db);
  }
  return v;
}

double DensityTable::sd() const { return std::sqrt(variance()); }

DensityTable oracle_abc_posterior_1d(const SyntheticModel& model,
                                     const ObservedData& obs,
                                     const KernelSpec& kernel, double eps,
                                     const std::vector<double>& theta_grid) {
  if (model.p != 1 || model.d != 1) {
    throw InvalidArgument("numeric oracle handles p = d = 1 models only");
  }
  if (eps <= 0.0) throw InvalidArgument("oracle needs eps > 0");
  if (theta_grid.size() < 3) throw InvalidArgument("grid too small");

  const double s_obs = obs.s_obs.at(0);
  const double n = static_cast<double>(obs.n);
  // gaussian kernel: K has sd eps/sqrt(gamma) in summary units
  double sigma_kernel2 = eps * eps;
  if (kernel.kind == KernelKind::kGaussian &&
      kernel.distance.kind == DistanceKind::kMahalanobis) {
    sigma_kernel2 = eps * eps / (*kernel.distance.gamma)(0, 0);
  }

  DensityTable table;
  table.theta = theta_grid;
  table.density.resize(theta_grid.size());
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    const Vec theta{theta_grid[i]};
    const double prior = model.prior.density(theta);
    if (prior == 0.0) {
      table.density[i] = 0.0;
      continue;
    }
    const double b = model.binding(theta)[0];
    const double var_s = model.noise_cov(theta)(0, 0) / n;
    double lik;
    if (kernel.kind == KernelKind::kUniform) {
      const double sd_s = std::sqrt(var_s);
      lik = normal_cdf((s_obs + eps - b) / sd_s) -
            normal_cdf((s_obs - eps - b) / sd_s);
    } else {
      const double v = var_s + sigma_kernel2;
      const double r = s_obs - b;
      lik = std::exp(-0.5 * r * r / v) / std::sqrt(6.283185307179586 * v);
    }
    table.density[i] = prior * lik;
  }

  double norm = 0.0;
  for (std::size_t i = 0; i + 1 < table.theta.size(); ++i) {
    norm += 0.5 * (table.density[i] + table.density[i + 1]) *
            (table.theta[i + 1] - table.theta[i]);
  }
  if (norm <= 0.0) {
    throw GridTooCoarse("posterior mass is zero over the supplied grid");
  }
  for (double& v : table.density) v /= norm;

  const double peak = *std::max_element(table.density.begin(), table.density.end());
  for (std::size_t i = 0; i + 1 < table.theta.size(); ++i) {
    const double hi = std::max(table.density[i], table.density[i + 1]);
    const double lo = std::min(table.density[i], table.density[i + 1]);
    if (hi >= 1e-6 * peak && lo < 0.1 * hi) {
      throw GridTooCoarse("density jumps by more than 10x near theta = " +
                          std::to_string(table.theta[i]) +
                          "; refine the grid");
    }
  }
  return table;
}

double concentration_mass(const DensityTable& table, double theta0,
                          double delta) {
  if (delta <= 0.0) return 0.0;
  return table.mass_between(theta0 - delta, theta0 + delta);
}

}  // namespace abclab
