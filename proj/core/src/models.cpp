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

#include "abclab/models.hpp"

#include <cmath>
#include <string>

#include "abclab/errors.hpp"

namespace abclab {

bool BoxPrior::contains(const Vec& theta) const {
  if (theta.size() != lo.size()) {
    throw DimensionMismatch("prior dimension vs theta");
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < lo[i] || theta[i] > hi[i]) return false;
  }
  return true;
}

double BoxPrior::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

double BoxPrior::density(const Vec& theta) const {
  return contains(theta) ? 1.0 / volume() : 0.0;
}

Vec BoxPrior::midpoint() const {
  Vec m(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) m[i] = 0.5 * (lo[i] + hi[i]);
  return m;
}

Vec BoxPrior::sample(RngStream& rng) const {
  Vec t(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    t[i] = lo[i] + (hi[i] - lo[i]) * rng.next_uniform();
  }
  return t;
}

namespace {

SummaryVec simulate_limit_law(const BindingFn& binding, const CovFn& cov,
                              const std::optional<Mat>& cached_chol,
                              const ParamVec& theta, std::int64_t n,
                              RngStream& rng, std::size_t d) {
  SummaryVec s = binding(theta);
  if (s.size() != d) {
    throw DimensionMismatch("binding output dimension");
  }
  double z[16];
  for (std::size_t i = 0; i < d; ++i) z[i] = rng.next_normal();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  if (cached_chol) {
    const Mat& low = *cached_chol;
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= i; ++j) acc += low(i, j) * z[j];
      s[i] += scale * acc;
    }
  } else {
    const Mat low = cholesky(cov(theta));
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= i; ++j) acc += low(i, j) * z[j];
      s[i] += scale * acc;
    }
  }
  return s;
}

}  // namespace

SummaryVec SyntheticModel::simulate(const ParamVec& theta, std::int64_t n,
                                    RngStream& rng) const {
  return simulate_limit_law(binding, noise_cov, const_noise_chol, theta, n,
                            rng, d);
}

SummaryVec SyntheticModel::simulate_observed(const ParamVec& theta,
                                             std::int64_t n,
                                             RngStream& rng) const {
  const BindingFn& b = observed_binding ? observed_binding : binding;
  const CovFn& c = observed_cov ? observed_cov : noise_cov;
  const std::optional<Mat>& low =
      observed_binding ? const_observed_chol : const_noise_chol;
  return simulate_limit_law(b, c, low, theta, n, rng, d);
}

ObservedData make_observed(const SyntheticModel& model, std::int64_t n,
                           std::uint64_t data_seed) {
  RngStream rng(data_seed, hash_combine(0x0B5E27EDULL, data_seed));
  ObservedData obs;
  obs.s_obs = model.simulate_observed(model.true_theta, n, rng);
  obs.n = n;
  obs.source_model = model.name;
  obs.data_seed = data_seed;
  return obs;
}

SyntheticModel make_linear_gaussian(double slope) {
  if (slope == 0.0) {
    throw ZeroSlope("linear-gaussian binding needs a nonzero slope");
  }
  SyntheticModel m;
  m.name = "linear";
  m.p = 1;
  m.d = 1;
  m.prior = BoxPrior{{-10.0}, {10.0}};
  m.binding = [slope](const Vec& t) { return Vec{slope * t[0]}; };
  m.noise_cov = [](const Vec&) { return Mat::identity(1); };
  m.true_theta = {1.0};
  m.const_noise_chol = Mat::identity(1);
  m.raw_simulate = [slope](const ParamVec& t, std::int64_t n, RngStream& rng) {
    // n IID Gaussian points with mean slope*theta; summary = sample mean
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) sum += slope * t[0] + rng.next_normal();
    return SummaryVec{sum / static_cast<double>(n)};
  };
  return m;
}

SyntheticModel make_bimodal_binding() {
  SyntheticModel m;
  m.name = "bimodal";
  m.p = 1;
  m.d = 1;
  m.prior = BoxPrior{{-2.0}, {4.0}};
  m.binding = [](const Vec& t) {
    const double u = t[0] - 1.0;
    return Vec{u * u};
  };
  m.noise_cov = [](const Vec&) { return Mat::identity(1); };
  m.true_theta = {0.0};
  m.identifiable = false;  // b(0) == b(2)
  m.const_noise_chol = Mat::identity(1);
  return m;
}

SyntheticModel make_flat_binding() {
  SyntheticModel m;
  m.name = "flat";
  m.p = 1;
  m.d = 1;
  m.prior = BoxPrior{{-2.0}, {3.0}};
  m.binding = [](const Vec& t) {
    const double x = t[0];
    if (x < 0.0) return Vec{x};
    if (x <= 1.0) return Vec{0.0};
    return Vec{x - 1.0};
  };
  m.noise_cov = [](const Vec&) { return Mat::identity(1); };
  m.true_theta = {0.5};
  m.identifiable = false;  // b is constant on [0, 1]
  m.const_noise_chol = Mat::identity(1);
  return m;
}

namespace {

// Asymptotic covariance of sqrt(n)*((mean, variance) - (mu, v)) for IID
// Gaussian data with variance v: diag(v, 2 v^2).
Mat mean_var_summary_cov(double v) { return Mat::diag({v, 2.0 * v * v}); }

RawSimulator gaussian_mean_var_raw(double var_offset) {
  return [var_offset](const ParamVec& t, std::int64_t n, RngStream& rng) {
    const double mu = t[0];
    const double sd = std::sqrt(t[0] * t[0] + var_offset);
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double x = mu + sd * rng.next_normal();
      sum += x;
      sumsq += x * x;
    }
    const double nn = static_cast<double>(n);
    const double mean = sum / nn;
    const double var = (sumsq - nn * mean * mean) / (nn - 1.0);
    return SummaryVec{mean, var};
  };
}

}  // namespace

std::pair<SyntheticModel, SyntheticModel> make_misspecified_pair() {
  SyntheticModel assumed;
  assumed.name = "misspec";
  assumed.p = 1;
  assumed.d = 2;
  assumed.prior = BoxPrior{{-3.0}, {3.0}};
  assumed.binding = [](const Vec& t) {
    return Vec{t[0], t[0] * t[0] + 1.0};
  };
  assumed.noise_cov = [](const Vec& t) {
    return mean_var_summary_cov(t[0] * t[0] + 1.0);
  };
  assumed.true_theta = {1.0};
  assumed.misspecified = true;
  // observed data really comes from the variance theta^2 + 2 process
  assumed.observed_binding = [](const Vec& t) {
    return Vec{t[0], t[0] * t[0] + 2.0};
  };
  assumed.observed_cov = [](const Vec& t) {
    return mean_var_summary_cov(t[0] * t[0] + 2.0);
  };
  assumed.raw_simulate = gaussian_mean_var_raw(1.0);
  assumed.raw_simulate_observed = gaussian_mean_var_raw(2.0);

  SyntheticModel truth;
  truth.name = "misspec-truth";
  truth.p = 1;
  truth.d = 2;
  truth.prior = assumed.prior;
  truth.binding = assumed.observed_binding;
  truth.noise_cov = assumed.observed_cov;
  truth.true_theta = {1.0};
  truth.raw_simulate = gaussian_mean_var_raw(2.0);
  return {assumed, truth};
}

SyntheticModel make_multi_summary(std::size_t d) {
  if (d < 2) {
    throw InvalidArgument("multi-summary model needs d >= 2");
  }
  SyntheticModel m;
  m.name = "multi:" + std::to_string(d);
  m.p = 1;
  m.d = d;
  m.prior = BoxPrior{{-10.0}, {10.0}};
  m.binding = [d](const Vec& t) {
    Vec b(d);
    for (std::size_t j = 0; j < d; ++j) b[j] = t[0] / static_cast<double>(j + 1);
    return b;
  };
  Vec avar(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double s = static_cast<double>(j + 1);
    avar[j] = s * s;
  }
  m.noise_cov = [avar](const Vec&) { return Mat::diag(avar); };
  m.true_theta = {1.0};
  Vec asd(d);
  for (std::size_t j = 0; j < d; ++j) asd[j] = static_cast<double>(j + 1);
  m.const_noise_chol = Mat::diag(asd);
  return m;
}

SyntheticModel model_by_name(const std::string& name) {
  if (name == "linear") return make_linear_gaussian(1.0);
  if (name == "bimodal") return make_bimodal_binding();
  if (name == "flat") return make_flat_binding();
  if (name == "misspec") return make_misspecified_pair().first;
  if (name == "misspec-truth") return make_misspecified_pair().second;
  if (name.rfind("multi:", 0) == 0) {
    const std::string arg = name.substr(6);
    std::size_t pos = 0;
    int d = 0;
    try {
      d = std::stoi(arg, &pos);
    } catch (const std::exception&) {
      throw UnknownModel("bad multi-summary dimension '" + arg + "'");
    }
    if (pos != arg.size() || d < 2) {
      throw UnknownModel("bad multi-summary dimension '" + arg + "'");
    }
    return make_multi_summary(static_cast<std::size_t>(d));
  }
  throw UnknownModel("'" + name + "' (see `abclab list-models`)");
}

std::vector<std::string> model_names() {
  return {"linear", "bimodal", "flat", "misspec", "misspec-truth", "multi:<d>"};
}

}  // namespace abclab
