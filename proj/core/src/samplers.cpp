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

#include "abclab/samplers.hpp"

#include <cmath>
#include <string>

#include "abclab/errors.hpp"

namespace abclab {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

double finalize_ess(SamplerReport& report) {
  report.ess = effective_sample_size(report.draws);
  return report.ess;
}

}  // namespace

GaussianProposal::GaussianProposal(Vec mean, Mat cov)
    : mean_(std::move(mean)), cov_(std::move(cov)), chol_(cholesky(cov_)) {
  double log_det = 0.0;
  for (std::size_t i = 0; i < chol_.rows; ++i) log_det += std::log(chol_(i, i));
  log_norm_ = -0.5 * static_cast<double>(mean_.size()) * kLog2Pi - log_det;
}

GaussianProposal GaussianProposal::fit(const std::vector<AcceptedDraw>& draws,
                                       double inflate) {
  if (draws.empty()) throw EmptyReport("cannot fit a proposal to zero draws");
  const std::size_t p = draws.front().theta.size();
  double wsum = 0.0;
  Vec mean(p, 0.0);
  for (const auto& d : draws) {
    wsum += d.weight;
    for (std::size_t i = 0; i < p; ++i) mean[i] += d.weight * d.theta[i];
  }
  if (wsum <= 0.0) throw DegenerateWeights("total weight is zero");
  for (double& v : mean) v /= wsum;
  Mat cov(p, p);
  for (const auto& d : draws) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        cov(i, j) += d.weight * (d.theta[i] - mean[i]) * (d.theta[j] - mean[j]);
  }
  for (double& v : cov.a) v *= inflate / wsum;
  return GaussianProposal(std::move(mean), std::move(cov));
}

Vec GaussianProposal::draw(RngStream& rng) const {
  return normal_draw(rng, mean_, chol_);
}

double GaussianProposal::log_density(const Vec& theta) const {
  const Vec r = vsub(theta, mean_);
  const Vec y = solve_lower(chol_, r);
  return log_norm_ - 0.5 * dot(y, y);
}

double GaussianProposal::max_sd() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < cov_.rows; ++i)
    worst = std::max(worst, cov_(i, i));
  return std::sqrt(worst);
}

SamplerReport rejection_abc(const SyntheticModel& model,
                            const ObservedData& obs, const KernelSpec& kernel,
                            double eps, std::int64_t n_draws, RngStream& rng) {
  if (eps <= 0.0) throw InvalidArgument("rejection_abc needs eps > 0");
  if (n_draws < 1) throw InvalidArgument("rejection_abc needs n_draws >= 1");
  SamplerReport report;
  report.n_proposed = n_draws;
  report.eps_used = eps;
  for (std::int64_t i = 0; i < n_draws; ++i) {
    RngStream draw_rng = rng.child(1, static_cast<std::uint64_t>(i));
    ParamVec theta = model.prior.sample(draw_rng);
    SummaryVec s = model.simulate(theta, obs.n, draw_rng);
    const double dist = distance(kernel.distance, obs.s_obs, s);
    const double w = kernel_weight_from_distance(kernel.kind, dist, eps);
    if (w > kWeightFloor) {
      report.draws.push_back({std::move(theta), std::move(s), w, dist});
    }
  }
  report.n_accepted = static_cast<std::int64_t>(report.draws.size());
  report.acceptance_rate =
      static_cast<double>(report.n_accepted) / static_cast<double>(n_draws);
  if (report.n_accepted == 0) {
    throw NoAcceptances("rejection sampler accepted 0 of " +
                        std::to_string(n_draws) + " draws at eps " +
                        std::to_string(eps));
  }
  finalize_ess(report);
  return report;
}

SamplerReport rejection_abc_quantile(const SyntheticModel& model,
                                     const ObservedData& obs,
                                     const KernelSpec& kernel,
                                     const BandwidthSchedule& sched,
                                     std::int64_t n_draws, RngStream& rng) {
  if (sched.mode != BandwidthMode::kQuantile) {
    throw InvalidArgument("rejection_abc_quantile needs a quantile schedule");
  }
  if (n_draws < 1) throw InvalidArgument("needs n_draws >= 1");
  std::vector<AcceptedDraw> all;
  all.reserve(static_cast<std::size_t>(n_draws));
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n_draws));
  for (std::int64_t i = 0; i < n_draws; ++i) {
    RngStream draw_rng = rng.child(1, static_cast<std::uint64_t>(i));
    ParamVec theta = model.prior.sample(draw_rng);
    SummaryVec s = model.simulate(theta, obs.n, draw_rng);
    const double dist = distance(kernel.distance, obs.s_obs, s);
    dists.push_back(dist);
    all.push_back({std::move(theta), std::move(s), 1.0, dist});
  }
  const double eps = quantile_bandwidth(sched, dists);

  SamplerReport report;
  report.n_proposed = n_draws;
  report.eps_used = eps;
  for (auto& dr : all) {
    if (kernel.kind == KernelKind::kUniform) {
      if (dr.distance > eps) continue;
      dr.weight = 1.0;
    } else {
      dr.weight = kernel_weight_from_distance(kernel.kind, dr.distance, eps);
      if (dr.weight <= kWeightFloor) continue;
    }
    report.draws.push_back(std::move(dr));
  }
  report.n_accepted = static_cast<std::int64_t>(report.draws.size());
  report.acceptance_rate =
      static_cast<double>(report.n_accepted) / static_cast<double>(n_draws);
  if (report.n_accepted == 0) {
    throw NoAcceptances("quantile rejection accepted 0 draws");
  }
  finalize_ess(report);
  return report;
}

SamplerReport importance_abc(const SyntheticModel& model,
                             const ObservedData& obs, const KernelSpec& kernel,
                             double eps, std::int64_t n_draws,
                             const Proposal& proposal, RngStream& rng) {
  if (!proposal.gaussian) {
    // q = prior: weights are constant, so this is the rejection sampler
    return rejection_abc(model, obs, kernel, eps, n_draws, rng);
  }
  if (eps <= 0.0) throw InvalidArgument("importance_abc needs eps > 0");
  const GaussianProposal& q = *proposal.gaussian;
  SamplerReport report;
  report.n_proposed = n_draws;
  report.eps_used = eps;
  const double log_prior = -std::log(model.prior.volume());
  for (std::int64_t i = 0; i < n_draws; ++i) {
    RngStream draw_rng = rng.child(1, static_cast<std::uint64_t>(i));
    ParamVec theta = q.draw(draw_rng);
    if (!model.prior.contains(theta)) continue;  // weight 0, still proposed
    SummaryVec s = model.simulate(theta, obs.n, draw_rng);
    const double dist = distance(kernel.distance, obs.s_obs, s);
    const double kw = kernel_weight_from_distance(kernel.kind, dist, eps);
    if (kw <= kWeightFloor) continue;
    const double w = kw * std::exp(log_prior - q.log_density(theta));
    if (w <= 0.0 || !std::isfinite(w)) continue;
    report.draws.push_back({std::move(theta), std::move(s), w, dist});
  }
  report.n_accepted = static_cast<std::int64_t>(report.draws.size());
  report.acceptance_rate =
      static_cast<double>(report.n_accepted) / static_cast<double>(n_draws);
  if (report.n_accepted == 0) {
    throw NoAcceptances("importance sampler accepted 0 of " +
                        std::to_string(n_draws) + " draws at eps " +
                        std::to_string(eps));
  }
  if (finalize_ess(report) < 2.0) {
    throw DegenerateWeights("effective sample size " +
                            std::to_string(report.ess) + " < 2");
  }
  return report;
}

namespace {

struct ProposedPoint {
  ParamVec theta;
  SummaryVec summary;
  double dist = 0.0;
  double log_q = 0.0;
  bool in_prior = false;
};

double prior_box_sd(const BoxPrior& prior) {
  double worst = 0.0;
  for (std::size_t i = 0; i < prior.dim(); ++i) {
    worst = std::max(worst, (prior.hi[i] - prior.lo[i]) / std::sqrt(12.0));
  }
  return worst;
}

}  // namespace

AdaptiveReport adaptive_importance_abc(const SyntheticModel& model,
                                       const ObservedData& obs,
                                       const KernelSpec& kernel,
                                       const BandwidthSchedule& sched,
                                       std::int64_t n_per_round, int rounds,
                                       RngStream& rng,
                                       std::optional<double> final_eps) {
  if (sched.mode != BandwidthMode::kQuantile) {
    throw InvalidArgument("adaptive sampler needs a quantile-mode schedule");
  }
  if (rounds < 2) throw InvalidArgument("adaptive sampler needs rounds >= 2");

  AdaptiveReport out;
  std::optional<GaussianProposal> proposal;  // empty = prior in round 1
  const double log_prior = -std::log(model.prior.volume());

  for (int round = 1; round <= rounds; ++round) {
    std::vector<ProposedPoint> points;
    points.reserve(static_cast<std::size_t>(n_per_round));
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n_per_round));
    for (std::int64_t i = 0; i < n_per_round; ++i) {
      RngStream draw_rng = rng.child(static_cast<std::uint64_t>(round),
                                     static_cast<std::uint64_t>(i));
      ProposedPoint pt;
      if (proposal) {
        pt.theta = proposal->draw(draw_rng);
        pt.in_prior = model.prior.contains(pt.theta);
        if (pt.in_prior) pt.log_q = proposal->log_density(pt.theta);
      } else {
        pt.theta = model.prior.sample(draw_rng);
        pt.in_prior = true;
        pt.log_q = log_prior;
      }
      if (pt.in_prior) {
        pt.summary = model.simulate(pt.theta, obs.n, draw_rng);
        pt.dist = distance(kernel.distance, obs.s_obs, pt.summary);
        dists.push_back(pt.dist);
      }
      points.push_back(std::move(pt));
    }
    if (dists.empty()) {
      throw NoAcceptances("adaptive round " + std::to_string(round) +
                          ": no proposal landed inside the prior");
    }

    const bool explicit_last = final_eps.has_value() && round == rounds;
    const double eps =
        explicit_last ? *final_eps : quantile_bandwidth(sched, dists);

    SamplerReport round_report;
    round_report.n_proposed = n_per_round;
    round_report.eps_used = eps;
    for (auto& pt : points) {
      if (!pt.in_prior) continue;
      double w = 0.0;
      if (kernel.kind == KernelKind::kUniform) {
        // quantile rounds accept at <= eps so the realized rate cannot fall
        // below the accept fraction; an explicit final eps keeps the strict rule
        const bool fires = explicit_last ? pt.dist < eps : pt.dist <= eps;
        if (!fires) continue;
        w = std::exp(log_prior - pt.log_q);
      } else {
        const double kw =
            kernel_weight_from_distance(kernel.kind, pt.dist, eps);
        if (kw <= kWeightFloor) continue;
        w = kw * std::exp(log_prior - pt.log_q);
      }
      if (w <= 0.0 || !std::isfinite(w)) continue;
      round_report.draws.push_back(
          {std::move(pt.theta), std::move(pt.summary), w, pt.dist});
    }
    round_report.n_accepted =
        static_cast<std::int64_t>(round_report.draws.size());
    round_report.acceptance_rate =
        static_cast<double>(round_report.n_accepted) /
        static_cast<double>(n_per_round);
    if (round_report.n_accepted == 0) {
      throw NoAcceptances("adaptive round " + std::to_string(round) +
                          " accepted 0 draws at eps " + std::to_string(eps));
    }
    finalize_ess(round_report);

    AdaptiveRound info;
    info.round = round;
    info.eps = eps;
    info.acceptance_rate = round_report.acceptance_rate;
    info.proposal_sd = proposal ? proposal->max_sd() : prior_box_sd(model.prior);
    out.rounds.push_back(info);

    if (round == rounds) {
      out.final = std::move(round_report);
      out.final_proposal = proposal;
      break;
    }
    proposal = GaussianProposal::fit(round_report.draws, 2.0);
  }
  return out;
}

SamplerReport mcmc_abc(const SyntheticModel& model, const ObservedData& obs,
                       const KernelSpec& kernel, double eps,
                       std::int64_t n_steps, const Mat& step_cov,
                       const ParamVec& init, RngStream& rng) {
  if (eps <= 0.0) throw InvalidArgument("mcmc_abc needs eps > 0");
  if (n_steps < 5) throw InvalidArgument("mcmc_abc needs n_steps >= 5");
  if (!model.prior.contains(init)) {
    throw InitOutsidePrior("chain initial state outside the prior box");
  }
  const Mat step_chol = cholesky(step_cov);
  const std::int64_t burn_in = n_steps / 5;

  RngStream init_rng = rng.child(0, 0);
  ParamVec theta = init;
  SummaryVec summary = model.simulate(theta, obs.n, init_rng);
  double dist = distance(kernel.distance, obs.s_obs, summary);
  double kw = kernel_weight_from_distance(kernel.kind, dist, eps);

  SamplerReport report;
  report.eps_used = eps;
  report.draws.reserve(static_cast<std::size_t>(n_steps - burn_in));
  std::int64_t accepted_moves = 0;

  for (std::int64_t step = 0; step < n_steps; ++step) {
    RngStream step_rng = rng.child(1, static_cast<std::uint64_t>(step));
    ParamVec prop = normal_draw(step_rng, theta, step_chol);
    bool accept = false;
    if (model.prior.contains(prop)) {
      SummaryVec prop_summary = model.simulate(prop, obs.n, step_rng);
      const double prop_dist =
          distance(kernel.distance, obs.s_obs, prop_summary);
      const double prop_kw =
          kernel_weight_from_distance(kernel.kind, prop_dist, eps);
      if (prop_kw > kWeightFloor) {
        // flat prior inside the box, so the Metropolis ratio is the kernel ratio
        if (kw <= kWeightFloor) {
          accept = true;
        } else {
          const double ratio = prop_kw / kw;
          accept = ratio >= 1.0 || step_rng.next_uniform() < ratio;
        }
      }
      if (accept) {
        theta = std::move(prop);
        summary = std::move(prop_summary);
        dist = prop_dist;
        kw = prop_kw;
      }
    }
    if (step >= burn_in) {
      if (accept) ++accepted_moves;
      report.draws.push_back({theta, summary, 1.0, dist});
    }
  }

  report.n_proposed = n_steps - burn_in;
  report.n_accepted = accepted_moves;
  report.acceptance_rate = static_cast<double>(accepted_moves) /
                           static_cast<double>(report.n_proposed);
  if (accepted_moves == 0) {
    throw ChainStuck("no accepted moves after burn-in (" +
                     std::to_string(report.n_proposed) + " proposals)");
  }
  finalize_ess(report);
  return report;
}

ParamVec posterior_mean(const SamplerReport& report) {
  if (report.draws.empty()) throw EmptyReport("no accepted draws");
  const std::size_t p = report.draws.front().theta.size();
  Vec mean(p, 0.0);
  double wsum = 0.0;
  for (const auto& d : report.draws) {
    wsum += d.weight;
    for (std::size_t i = 0; i < p; ++i) mean[i] += d.weight * d.theta[i];
  }
  if (wsum <= 0.0) throw EmptyReport("total weight is zero");
  for (double& v : mean) v /= wsum;
  return mean;
}

Mat posterior_cov(const SamplerReport& report) {
  const ParamVec mean = posterior_mean(report);
  const std::size_t p = mean.size();
  Mat cov(p, p);
  double wsum = 0.0;
  for (const auto& d : report.draws) {
    wsum += d.weight;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        cov(i, j) += d.weight * (d.theta[i] - mean[i]) * (d.theta[j] - mean[j]);
  }
  for (double& v : cov.a) v /= wsum;
  return cov;
}

double effective_sample_size(const std::vector<AcceptedDraw>& draws) {
  double sum = 0.0, sumsq = 0.0;
  for (const auto& d : draws) {
    sum += d.weight;
    sumsq += d.weight * d.weight;
  }
  return sumsq > 0.0 ? sum * sum / sumsq : 0.0;
}

}  // namespace abclab
