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
#include "abclab/metrics.hpp"
#include "abclab/models.hpp"

namespace abclab {

/// Draws with weight below this floor count as rejected under the soft
/// (gaussian-kernel) acceptance rule.
inline constexpr double kWeightFloor = 1e-12;

/// One accepted (parameter, summary) pair with its importance weight and its
/// realized summary distance. Uniform-kernel rejection output has weight 1.
struct AcceptedDraw {
  ParamVec theta;
  SummaryVec summary;
  double weight = 1.0;
  double distance = 0.0;
};

/// Output of one sampler run.
///
/// acceptance_rate = n_accepted / n_proposed. ess = (sum w)^2 / sum w^2 and
/// is <= n_accepted for rejection and importance output; for MCMC the draws
/// are the post-burn-in chain states (weight 1 each) while n_accepted counts
/// accepted moves, so there ess equals the kept chain length instead.
struct SamplerReport {
  std::vector<AcceptedDraw> draws;
  std::int64_t n_proposed = 0;
  std::int64_t n_accepted = 0;
  double acceptance_rate = 0.0;
  double eps_used = 0.0;
  double ess = 0.0;
};

/// Gaussian proposal with cached Cholesky factor.
class GaussianProposal {
 public:
  GaussianProposal(Vec mean, Mat cov);

  /// Weighted-moment fit: mean = weighted mean of the draws, covariance =
  /// inflate * weighted covariance.
  static GaussianProposal fit(const std::vector<AcceptedDraw>& draws,
                              double inflate);

  Vec draw(RngStream& rng) const;
  double log_density(const Vec& theta) const;
  const Vec& mean() const { return mean_; }
  const Mat& cov() const { return cov_; }
  /// sqrt of the largest diagonal covariance entry; a convenient scalar
  /// summary of the proposal width.
  double max_sd() const;

 private:
  Vec mean_;
  Mat cov_;
  Mat chol_;
  double log_norm_;
};

/// Parameter proposal: either the model prior or a Gaussian (always
/// truncated to the prior box by zero prior density outside it).
struct Proposal {
  std::optional<GaussianProposal> gaussian;  // empty = propose from the prior

  static Proposal prior() { return {}; }
  static Proposal from_gaussian(GaussianProposal g) { return {std::move(g)}; }
};

/// Rejection sampler: theta from the prior, summary from the model, keep
/// when the kernel fires. With a gaussian kernel nothing is discarded by a
/// hard threshold; draws carry the kernel weight instead (soft acceptance,
/// weight floor kWeightFloor). Throws NoAcceptances when nothing survives.
SamplerReport rejection_abc(const SyntheticModel& model,
                            const ObservedData& obs, const KernelSpec& kernel,
                            double eps, std::int64_t n_draws, RngStream& rng);

/// Rejection sampler with the bandwidth chosen indirectly: eps is set to the
/// accept_fraction-quantile of the realized distances (so the acceptance
/// rate cannot fall below the accept fraction), then draws are kept at
/// dist <= eps (uniform kernel) or weighted by the kernel (gaussian).
SamplerReport rejection_abc_quantile(const SyntheticModel& model,
                                     const ObservedData& obs,
                                     const KernelSpec& kernel,
                                     const BandwidthSchedule& sched,
                                     std::int64_t n_draws, RngStream& rng);

/// Importance sampler: theta from the proposal, weight prior/proposal (times
/// the kernel weight under a gaussian kernel), same acceptance rule as the
/// rejection sampler. Weights are stored unnormalised. Throws NoAcceptances
/// or DegenerateWeights (ess < 2).
SamplerReport importance_abc(const SyntheticModel& model,
                             const ObservedData& obs, const KernelSpec& kernel,
                             double eps, std::int64_t n_draws,
                             const Proposal& proposal, RngStream& rng);

struct AdaptiveRound {
  int round = 0;
  double eps = 0.0;
  double acceptance_rate = 0.0;
  double proposal_sd = 0.0;  // prior box sd for round 1, fitted sd after
};

struct AdaptiveReport {
  SamplerReport final;
  std::vector<AdaptiveRound> rounds;
  std::optional<GaussianProposal> final_proposal;
};

/// Adaptive importance sampler. Round 1 proposes from the prior; each later
/// round proposes from a Gaussian fitted to the previous round's weighted
/// accepted draws (weighted mean, 2x weighted covariance) and accepts at the
/// accept_fraction-quantile of that round's distances. When final_eps is
/// set, the last round uses it as an explicit bandwidth instead of the
/// quantile. Throws NoAcceptances tagged with the failing round.
AdaptiveReport adaptive_importance_abc(const SyntheticModel& model,
                                       const ObservedData& obs,
                                       const KernelSpec& kernel,
                                       const BandwidthSchedule& sched,
                                       std::int64_t n_per_round, int rounds,
                                       RngStream& rng,
                                       std::optional<double> final_eps = {});

/// Random-walk ABC-MCMC. Proposes theta' = theta + chol(step_cov) z,
/// simulates a summary, and accepts when the kernel fires and the Metropolis
/// prior ratio passes. Returns all post-burn-in states (burn-in = n_steps/5)
/// with weight 1; acceptance_rate is the post-burn-in move rate. Throws
/// InitOutsidePrior and ChainStuck.
SamplerReport mcmc_abc(const SyntheticModel& model, const ObservedData& obs,
                       const KernelSpec& kernel, double eps,
                       std::int64_t n_steps, const Mat& step_cov,
                       const ParamVec& init, RngStream& rng);

/// Weighted posterior-mean estimate sum(w theta) / sum(w).
ParamVec posterior_mean(const SamplerReport& report);

/// Weighted posterior covariance of theta.
Mat posterior_cov(const SamplerReport& report);

double effective_sample_size(const std::vector<AcceptedDraw>& draws);

}  // namespace abclab
