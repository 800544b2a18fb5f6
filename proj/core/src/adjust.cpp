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

#include "abclab/adjust.hpp"

#include <string>

#include "abclab/errors.hpp"

namespace abclab {

RegressionFit fit_regression(const std::vector<AcceptedDraw>& draws) {
  if (draws.empty()) throw TooFewDraws("no draws");
  const std::size_t p = draws.front().theta.size();
  const std::size_t d = draws.front().summary.size();
  if (draws.size() < d + 2) {
    throw TooFewDraws(std::to_string(draws.size()) + " draws for " +
                      std::to_string(d) + " summaries (need >= d + 2)");
  }

  double wsum = 0.0;
  Vec s_mean(d, 0.0), t_mean(p, 0.0);
  for (const auto& dr : draws) {
    wsum += dr.weight;
    for (std::size_t j = 0; j < d; ++j) s_mean[j] += dr.weight * dr.summary[j];
    for (std::size_t i = 0; i < p; ++i) t_mean[i] += dr.weight * dr.theta[i];
  }
  if (wsum <= 0.0) throw DegenerateWeights("total weight is zero");
  for (double& v : s_mean) v /= wsum;
  for (double& v : t_mean) v /= wsum;

  // centered weighted cross-products
  Mat sxx(d, d);
  Mat sxy(d, p);
  for (const auto& dr : draws) {
    for (std::size_t j = 0; j < d; ++j) {
      const double xj = dr.summary[j] - s_mean[j];
      for (std::size_t k = 0; k < d; ++k)
        sxx(j, k) += dr.weight * xj * (dr.summary[k] - s_mean[k]);
      for (std::size_t i = 0; i < p; ++i)
        sxy(j, i) += dr.weight * xj * (dr.theta[i] - t_mean[i]);
    }
  }

  try {
    cholesky(sxx);  // rank check on the unridged matrix
  } catch (const NotPositiveDefinite& e) {
    throw RankDeficientDesign(
        std::string("summaries are collinear among accepted draws (") +
        e.what() + ")");
  }

  double trace = 0.0;
  for (std::size_t j = 0; j < d; ++j) trace += sxx(j, j);
  Mat ridged = sxx;
  for (std::size_t j = 0; j < d; ++j) ridged(j, j) += 1e-10 * trace;
  const Mat low = cholesky(ridged);

  RegressionFit fit;
  fit.b_hat = Mat(p, d);
  Vec rhs(d);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < d; ++j) rhs[j] = sxy(j, i);
    const Vec beta = solve_lower_t(low, solve_lower(low, rhs));
    for (std::size_t j = 0; j < d; ++j) fit.b_hat(i, j) = beta[j];
  }
  fit.alpha_hat = Vec(p);
  for (std::size_t i = 0; i < p; ++i) {
    double a = t_mean[i];
    for (std::size_t j = 0; j < d; ++j) a -= fit.b_hat(i, j) * s_mean[j];
    fit.alpha_hat[i] = a;
  }
  fit.residual_var = Vec(p, 0.0);
  for (const auto& dr : draws) {
    for (std::size_t i = 0; i < p; ++i) {
      double r = dr.theta[i] - fit.alpha_hat[i];
      for (std::size_t j = 0; j < d; ++j) r -= fit.b_hat(i, j) * dr.summary[j];
      fit.residual_var[i] += dr.weight * r * r;
    }
  }
  for (double& v : fit.residual_var) v /= wsum;
  return fit;
}

std::vector<AcceptedDraw> adjust_draws(const std::vector<AcceptedDraw>& draws,
                                       const RegressionFit& fit,
                                       const SummaryVec& s_obs) {
  if (draws.empty()) return {};
  const std::size_t p = fit.b_hat.rows;
  const std::size_t d = fit.b_hat.cols;
  if (draws.front().theta.size() != p || draws.front().summary.size() != d ||
      s_obs.size() != d) {
    throw DimensionMismatch("regression fit vs draws/s_obs");
  }
  std::vector<AcceptedDraw> out = draws;
  for (auto& dr : out) {
    for (std::size_t i = 0; i < p; ++i) {
      double shift = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        shift += fit.b_hat(i, j) * (dr.summary[j] - s_obs[j]);
      dr.theta[i] -= shift;
    }
  }
  return out;
}

}  // namespace abclab
