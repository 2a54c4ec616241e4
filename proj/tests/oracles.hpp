// Independent reference values for the tests: closed forms, direct
// quadrature (no FFT library), and seeded generators of stable filters.
#ifndef BIDISK_TESTS_ORACLES_HPP
#define BIDISK_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

#include "bidisk/ar2d.hpp"
#include "bidisk/covariance.hpp"
#include "bidisk/polynomial.hpp"

namespace oracle {

using bidisk::cd;
using bidisk::Index2;
using bidisk::Mat;
using bidisk::MatrixPolynomial2D;

inline Mat scalar(cd x) { return Mat::Constant(1, 1, x); }

// (1 - 0.5 z)(1 - 0.4 w) and its covariance 0.5^|i| 0.4^|j| / (0.75 * 0.84)
inline MatrixPolynomial2D separable_p() {
  MatrixPolynomial2D p(1, 1, 1);
  p(0, 0) = scalar(1.0);
  p(1, 0) = scalar(-0.5);
  p(0, 1) = scalar(-0.4);
  p(1, 1) = scalar(0.2);
  return p;
}
inline double separable_c(int i, int j) {
  return std::pow(0.5, std::abs(i)) * std::pow(0.4, std::abs(j)) / (0.75 * 0.84);
}
inline bidisk::CorrelationGrid separable_grid(int n = 1, int m = 1) {
  return bidisk::CorrelationGrid::from_function(1, n, m, [](Index2 k) { return scalar(separable_c(k.i, k.j)); });
}

// 1 - 0.3 z - 0.3 w
inline MatrixPolynomial2D q_p() {
  MatrixPolynomial2D p(1, 1, 1);
  p(0, 0) = scalar(1.0);
  p(1, 0) = scalar(-0.3);
  p(0, 1) = scalar(-0.3);
  return p;
}

inline bidisk::CorrelationGrid identity_grid(int d = 1, int n = 1, int m = 1) {
  return bidisk::CorrelationGrid::from_function(d, n, m, [d](Index2 k) {
    return k == Index2{0, 0} ? Mat(Mat::Identity(d, d)) : Mat(Mat::Zero(d, d));
  });
}

// c_ij = N^-2 sum_{a,b} (p p^*)^-1(z_a, w_b) z_a^-i w_b^-j by direct summation.
inline std::map<Index2, Mat> quadrature_coefficients(const MatrixPolynomial2D& p, int lo, int hi, int N) {
  const int d = p.dim();
  std::map<Index2, Mat> out;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) out[{i, j}] = Mat::Zero(d, d);
  for (int a = 0; a < N; ++a) {
    const double ta = 2.0 * std::numbers::pi * a / N;
    for (int b = 0; b < N; ++b) {
      const double tb = 2.0 * std::numbers::pi * b / N;
      const Mat v = p.eval(std::polar(1.0, ta), std::polar(1.0, tb));
      const Mat f = (v * v.adjoint()).inverse();
      for (auto& [k, c] : out) c += f * std::polar(1.0, -(k.i * ta + k.j * tb));
    }
  }
  for (auto& [k, c] : out) c /= static_cast<double>(N) * N;
  return out;
}

inline Mat random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ() * Mat::Identity(d, d);
}

// Stable by construction: p_00 = I and the other diagonal coefficients sum in
// modulus to 0.6 per channel. For d = 2 the result is U diag(p1, p2) V, which
// has both a left and a right factorization of the same degree.
inline MatrixPolynomial2D random_stable(int d, int n, int m, bool zeroCorner, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixPolynomial2D p(d, n, m);
  for (int c = 0; c < d; ++c) {
    double total = 0.0;
    std::map<Index2, cd> v;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= m; ++j) {
        if ((i == 0 && j == 0) || (zeroCorner && i == n && j == m)) continue;
        v[{i, j}] = cd(u(rng), u(rng));
        total += std::abs(v[{i, j}]);
      }
    }
    p(0, 0)(c, c) = 1.0;
    for (const auto& [k, x] : v) p(k.i, k.j)(c, c) = 0.6 * x / total;
  }
  if (d > 1) {
    const Mat U = random_unitary(d, rng), V = random_unitary(d, rng);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) p(i, j) = U * p(i, j) * V;
  }
  return p;
}

inline double max_coeff_diff(const MatrixPolynomial2D& a, const MatrixPolynomial2D& b) {
  double worst = 0.0;
  for (int i = 0; i <= std::max(a.n(), b.n()); ++i) {
    for (int j = 0; j <= std::max(a.m(), b.m()); ++j) {
      const Mat x = (i <= a.n() && j <= a.m()) ? a(i, j) : Mat::Zero(a.dim(), a.dim());
      const Mat y = (i <= b.n() && j <= b.m()) ? b(i, j) : Mat::Zero(b.dim(), b.dim());
      worst = std::max(worst, (x - y).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

inline Mat random_hermitian(int n, std::mt19937_64& rng, double shift = 0.0) {
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = cd(g(rng), g(rng));
  return 0.5 * (a + a.adjoint()) + shift * Mat::Identity(n, n);
}

inline Mat random_pd(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = cd(g(rng), g(rng));
  return a * a.adjoint() + 0.5 * Mat::Identity(n, n);
}

}  // namespace oracle

#endif  // BIDISK_TESTS_ORACLES_HPP
