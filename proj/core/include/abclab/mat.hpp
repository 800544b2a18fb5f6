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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "abclab/rng.hpp"

namespace abclab {

using Vec = std::vector<double>;
using ParamVec = Vec;    // p-dimensional parameter vector
using SummaryVec = Vec;  // d-dimensional summary statistic

// Tolerances for the small dense problems handled here (dims <= 10,
// double precision).
inline constexpr double kSpdTol = 1e-12;
inline constexpr double kSymTol = 1e-10;
inline constexpr double kReconstructTol = 1e-9;
inline constexpr double kSolveTol = 1e-9;

/// Dense row-major matrix. Dimensions stay tiny (p, d <= 10), so there is no
/// blocking, pivoting or sparsity; everything is a plain O(n^3) loop.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major, rows*cols entries

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  Mat(std::initializer_list<std::initializer_list<double>> init);

  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }
  static Mat diag(const Vec& d);

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
  bool square() const { return rows == cols; }
};

Mat operator*(const Mat& x, const Mat& y);
Vec operator*(const Mat& m, const Vec& v);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat scaled(const Mat& m, double s);
Mat transpose(const Mat& m);
double max_abs_diff(const Mat& x, const Mat& y);
bool is_symmetric(const Mat& m, double tol = kSymTol);

/// Lower-triangular L with L*L^T = m. Throws NotPositiveDefinite when a
/// pivot is <= kSpdTol, DimensionMismatch/InvalidArgument on bad shape.
Mat cholesky(const Mat& m);

/// Forward/back substitution against a lower-triangular factor.
Vec solve_lower(const Mat& chol, const Vec& b);
Vec solve_lower_t(const Mat& chol, const Vec& y);

/// Solves m*x = b for symmetric positive definite m via Cholesky.
Vec solve_spd(const Mat& m, const Vec& b);

/// Inverse of a symmetric positive definite matrix.
Mat inverse_spd(const Mat& m);

/// mean + chol_cov * z with z a vector of independent standard normals drawn
/// from rng. chol_cov must be lower triangular (a zero matrix is allowed and
/// returns mean exactly).
Vec normal_draw(RngStream& rng, const Vec& mean, const Mat& chol_cov);

// small vector helpers
double dot(const Vec& x, const Vec& y);
Vec vadd(const Vec& x, const Vec& y);
Vec vsub(const Vec& x, const Vec& y);
Vec vscale(const Vec& x, double s);
double norm2(const Vec& x);

}  // namespace abclab
