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

#include "abclab/mat.hpp"

#include <cmath>
#include <string>

#include "abclab/errors.hpp"

namespace abclab {

namespace {

void require_same_shape(const Mat& x, const Mat& y, const char* op) {
  if (x.rows != y.rows || x.cols != y.cols) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(x.rows) +
                            "x" + std::to_string(x.cols) + " vs " +
                            std::to_string(y.rows) + "x" +
                            std::to_string(y.cols));
  }
}

}  // namespace

Mat::Mat(std::initializer_list<std::initializer_list<double>> init) {
  rows = init.size();
  cols = rows == 0 ? 0 : init.begin()->size();
  a.reserve(rows * cols);
  for (const auto& row : init) {
    if (row.size() != cols) {
      throw DimensionMismatch("ragged initializer list");
    }
    a.insert(a.end(), row.begin(), row.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) {
    throw DimensionMismatch("matrix product shape");
  }
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const double v = x(i, k);
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) += v * y(k, j);
    }
  }
  return out;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols != v.size()) {
    throw DimensionMismatch("matrix-vector product shape");
  }
  Vec out(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat operator+(const Mat& x, const Mat& y) {
  require_same_shape(x, y, "matrix add");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

Mat operator-(const Mat& x, const Mat& y) {
  require_same_shape(x, y, "matrix subtract");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

Mat scaled(const Mat& m, double s) {
  Mat out = m;
  for (double& v : out.a) v *= s;
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
  return out;
}

double max_abs_diff(const Mat& x, const Mat& y) {
  require_same_shape(x, y, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
  }
  return worst;
}

bool is_symmetric(const Mat& m, double tol) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i + 1; j < m.cols; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

Mat cholesky(const Mat& m) {
  if (!m.square()) {
    throw DimensionMismatch("cholesky needs a square matrix");
  }
  if (!is_symmetric(m)) {
    throw InvalidArgument("cholesky input not symmetric within tolerance");
  }
  const std::size_t n = m.rows;
  Mat low(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= low(j, k) * low(j, k);
    if (pivot <= kSpdTol) {
      throw NotPositiveDefinite("pivot " + std::to_string(pivot) +
                                " at column " + std::to_string(j));
    }
    low(j, j) = std::sqrt(pivot);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= low(i, k) * low(j, k);
      low(i, j) = s / low(j, j);
    }
  }
  return low;
}

Vec solve_lower(const Mat& chol, const Vec& b) {
  if (chol.rows != b.size()) {
    throw DimensionMismatch("solve_lower shape");
  }
  Vec y(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol(i, k) * y[k];
    y[i] = s / chol(i, i);
  }
  return y;
}

Vec solve_lower_t(const Mat& chol, const Vec& y) {
  if (chol.rows != y.size()) {
    throw DimensionMismatch("solve_lower_t shape");
  }
  const std::size_t n = y.size();
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= chol(k, ii) * x[k];
    x[ii] = s / chol(ii, ii);
  }
  return x;
}

Vec solve_spd(const Mat& m, const Vec& b) {
  const Mat low = cholesky(m);
  return solve_lower_t(low, solve_lower(low, b));
}

Mat inverse_spd(const Mat& m) {
  const Mat low = cholesky(m);
  const std::size_t n = m.rows;
  Mat inv(n, n);
  Vec e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vec col = solve_lower_t(low, solve_lower(low, e));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

Vec normal_draw(RngStream& rng, const Vec& mean, const Mat& chol_cov) {
  if (chol_cov.rows != mean.size() || chol_cov.cols != mean.size()) {
    throw DimensionMismatch("normal_draw covariance shape");
  }
  const std::size_t n = mean.size();
  double z[16];
  if (n > 16) throw InvalidArgument("normal_draw dimension > 16");
  for (std::size_t i = 0; i < n; ++i) z[i] = rng.next_normal();
  Vec out = mean;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += chol_cov(i, j) * z[j];
    out[i] += s;
  }
  return out;
}

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec vadd(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vadd");
  Vec out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Vec vsub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vsub");
  Vec out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

Vec vscale(const Vec& x, double s) {
  Vec out = x;
  for (double& v : out) v *= s;
  return out;
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

}  // namespace abclab
